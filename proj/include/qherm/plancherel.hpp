#pragma once

// Size-2 harmonic analysis: the H_l family in Y = q^y, the weight w(y), exact
// contour integrals as residue sums in W = Y^2, the spherical transforms of
// orbit indicators in (X, Y) = (q^x, q^y) coordinates, and the Plancherel and
// inversion identities.

#include <string>
#include <vector>

#include "qherm/density.hpp"
#include "qherm/laurent.hpp"

namespace qherm {

/// Laurent polynomial over Q in (u_1, u_2).
using UPoly = LaurentPoly<ExactRational>;

/// num / den with num, den in Q[u_1^{+-1}, u_2^{+-1}]. Not reduced; equality
/// is decided by cross-multiplication. Monomial denominators are folded
/// into the numerator.
class BiFrac {
public:
    BiFrac() : BiFrac(0) {}
    BiFrac(long c) : BiFrac(ExactRational(c)) {}
    BiFrac(const ExactRational& c);
    BiFrac(UPoly num, UPoly den);

    static BiFrac u1();
    static BiFrac u2();

    bool is_zero() const { return num_.is_zero(); }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    BiFrac operator-() const;
    BiFrac& operator+=(const BiFrac& o);
    BiFrac& operator-=(const BiFrac& o);
    BiFrac& operator*=(const BiFrac& o);
    BiFrac& operator/=(const BiFrac& o);
    friend BiFrac operator+(BiFrac a, const BiFrac& b) { return a += b; }
    friend BiFrac operator-(BiFrac a, const BiFrac& b) { return a -= b; }
    friend BiFrac operator*(BiFrac a, const BiFrac& b) { return a *= b; }
    friend BiFrac operator/(BiFrac a, const BiFrac& b) { return a /= b; }
    bool operator==(const BiFrac& o) const;

    /// u_1 = q, u_2 = q^{-2}.
    RatFuncQ at_q() const;
    /// Cancels the factors 1 + u_i, 1 - u_i, 1 - u_1 u_2, u_1 -+ u_2 and
    /// makes the denominator's leading coefficient 1.
    BiFrac simplified() const;
    ExactRational eval(const ExactRational& u1, const ExactRational& u2) const;
    std::string to_string() const;

private:
    void fold();
    UPoly num_, den_;
};

inline bool is_zero(const BiFrac& x) { return x.is_zero(); }

template <class C>
using YPoly = LaurentPoly<C>;  // one variable, Y

/// Poles of w(y) / W in the W-plane.
enum class Pole { Zero, U1, U2, InvU1, InvU2 };

/// Poles counted as inside the contour. The default is the configuration
/// for 0 < u_i < 1, which the deformed contour keeps for u_1 = q.
struct ContourRule {
    std::vector<Pole> inside{Pole::Zero, Pole::U1, Pole::U2};
};

/// H_l(Y) = sum over Y -> 1/Y of Y^{-l} (1 - u_1 Y^2)(1 - u_2 Y^2) / (1 - Y^2).
template <class C>
YPoly<C> h_poly(int ell, const C& u1, const C& u2) {
    if (ell < 1) throw std::invalid_argument("H_l needs l >= 1");
    auto mono = [](int e, const C& c) { return YPoly<C>::monomial({e}, c); };
    auto f = mono(-ell, C(1)) * (mono(0, C(1)) - mono(2, u1)) * (mono(0, C(1)) - mono(2, u2));
    auto g = mono(ell + 2, C(1)) * (mono(0, C(1)) - mono(-2, u1)) * (mono(0, C(1)) - mono(-2, u2));
    auto quot = (f - g).exact_div(mono(0, C(1)) - mono(2, C(1)));
    if (!quot) throw std::logic_error("H_l is not a Laurent polynomial");
    return *quot;
}

/// w as a function of W = Y^2: (1 - W)(1 - 1/W) / prod_i (1 - u_i W)(1 - u_i / W).
template <class C>
C weight_w(const C& w, const C& u1, const C& u2) {
    C one(1);
    return (one - w) * (one - one / w) / ((one - u1 * w) * (one - u2 * w) * (one - u1 / w) * (one - u2 / w));
}

namespace detail {

// Taylor coefficients at W = 0 of R(W) = -(1 - W)^2 / ((1 - u1 W)(1 - u2 W)(W - u1)(W - u2)).
template <class C>
std::vector<C> r_series(int order, const C& u1, const C& u2) {
    std::vector<C> s(static_cast<size_t>(order + 1), C(0));
    if (order < 0) return s;
    auto geo = [order](const C& r) {
        std::vector<C> v(static_cast<size_t>(order + 1));
        C p(1);
        for (int j = 0; j <= order; ++j, p *= r) v[static_cast<size_t>(j)] = p;
        return v;
    };
    auto mul = [order](const std::vector<C>& a, const std::vector<C>& b) {
        std::vector<C> c(static_cast<size_t>(order + 1), C(0));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) c[static_cast<size_t>(i + j)] += a[i] * b[j];
        return c;
    };
    // 1/(W - u) = -(1/u) sum (W/u)^j
    C one(1);
    auto t = mul(mul(geo(u1), geo(u2)), mul(geo(one / u1), geo(one / u2)));
    C scale = -(one / (u1 * u2));  // -(1)(1/u1)(1/u2) from the two inverted linear factors
    std::vector<C> lead(static_cast<size_t>(order + 1), C(0));
    lead[0] = one;
    if (order >= 1) lead[1] = C(-2);
    if (order >= 2) lead[2] = one;
    auto r = mul(lead, t);
    for (auto& c : r) c *= scale;
    return r;
}

}  // namespace detail

/// (1 / 2 pi i) times the contour integral of F(Y) w dY / Y, as a sum of
/// residues of A(W) R(W) where A is the even part of F written in W.
template <class C>
C contour_residues(const YPoly<C>& f, const C& u1, const C& u2, const ContourRule& rule = {}) {
    std::vector<std::pair<int, C>> a;  // (k, coefficient of W^k)
    int lowest = 0;
    for (const auto& [e, c] : f.terms())
        if (e[0] % 2 == 0) {
            a.push_back({e[0] / 2, c});
            lowest = std::min(lowest, e[0] / 2);
        }
    auto eval_a = [&](const C& w) {
        C acc(0);
        for (const auto& [k, c] : a) acc += c * YPoly<C>::int_pow(w, k);
        return acc;
    };
    C one(1), total(0);
    for (Pole pole : rule.inside) {
        switch (pole) {
            case Pole::Zero: {
                auto r = detail::r_series(-lowest - 1, u1, u2);
                for (const auto& [k, c] : a)
                    if (k < 0) total += c * r[static_cast<size_t>(-k - 1)];
                break;
            }
            case Pole::U1:
            case Pole::U2: {
                const C& u = pole == Pole::U1 ? u1 : u2;
                const C& v = pole == Pole::U1 ? u2 : u1;
                total += -(eval_a(u) * (one - u)) / ((one + u) * (one - u * v) * (u - v));
                break;
            }
            case Pole::InvU1:
            case Pole::InvU2: {
                const C& u = pole == Pole::InvU1 ? u1 : u2;
                const C& v = pole == Pole::InvU1 ? u2 : u1;
                C w = one / u;
                total += eval_a(w) * (one - w) * (one - w) / (u * (one - v * w) * (w - u) * (w - v));
                break;
            }
        }
    }
    return total;
}

/// int_U f(y) conj(g(y)) w(y) dy with dy normalized so that int_U w dy =
/// 1 / ((1 + u_1)(1 + u_2)(1 - u_1 u_2)); conj(Y) = 1/Y on the contour.
template <class C>
C contour_inner(const YPoly<C>& f, const YPoly<C>& g, const C& u1, const C& u2, const ContourRule& rule = {},
                const C& normalization = C(1)) {
    YPoly<C> gbar(1);
    for (const auto& [e, c] : g.terms()) gbar.add_term({-e[0]}, c);
    return contour_residues(f * gbar, u1, u2, rule) * normalization / C(2);
}

// ---- transforms with u_1 = q, u_2 = q^{-2} ----

/// Polynomial in (X, Y) = (q^x, q^y) with x = (z_1 + z_2)/2, y = (z_2 - z_1)/2.
using XYPoly = LaurentPoly<RatFuncQ>;

/// scalar * X^xexp * H_h(Y), with h = 0 meaning the constant 1.
struct TransformValue {
    RatFuncQ scalar;
    int xexp = 0;
    int h = 0;

    XYPoly poly() const;
};

/// F of the indicator of the inverse orbit of pi^alpha, i.e. v(K pi^alpha) Psi(pi^alpha; z).
TransformValue f_hat_size2(const Partition& alpha);

/// Psi(z) in x_1, x_2 rewritten with x_1 = X / Y, x_2 = X Y.
XYPoly to_xy(const LaurentPoly<RatFuncQ>& psi);

/// v(K pi^alpha) normalized by v(K 1_2) = 1.
RatFuncQ orbit_volume(const Partition& alpha);

/// (1 + q^{-2})^2 / (1 - q^{-1})
RatFuncQ plancherel_normalization();

/// Unnormalized <f, g> = int_T dx int_U f conj(g) w dy, with int_T q^{kx} dx = [k = 0].
RatFuncQ xy_inner(const XYPoly& f, const XYPoly& g, const ContourRule& rule = {});

struct PlancherelResult {
    RatFuncQ lhs, rhs;  // transform side (normalized) and orbit side
    bool holds = false;
};
PlancherelResult plancherel_check(const Partition& alpha, const Partition& beta);

/// Value at pi^x of the indicator of K pi^alpha, recovered by the inversion
/// formula.
RatFuncQ inversion_value(const Partition& alpha, const Partition& x);

}  // namespace qherm
