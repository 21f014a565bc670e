#include "qherm/spherical.hpp"

#include <numeric>
#include <stdexcept>

namespace qherm {

namespace {

RatFuncQ qp(int k) { return RatFuncQ::q_pow(k); }

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

}  // namespace

SymTemplate c_n_template(int n) {
    SymTemplate t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            t.num.push_back({i, j, qp(1)});
            t.num.push_back({i, j, qp(-2)});
        }
    t.den = vandermonde(n);
    return t;
}

std::vector<int> lambda_alpha(const Partition& alpha) {
    std::vector<int> l;
    for (int a : alpha.parts()) l.push_back(floor_half(a + 1));
    return l;
}

OddData odd_data(const Partition& alpha) {
    const int n = alpha.size();
    OddData d{{}, RatFuncQ(1)};
    for (int i = 0; i < n;) {
        if (alpha[i] % 2 != 0) {
            if (i + 1 >= n || alpha[i + 1] != alpha[i]) throw std::invalid_argument("unpaired odd entry");
            int l = i + 1;
            d.i_odd.push_back(l);
            d.c_odd *= (RatFuncQ(1) - qp(-1)) * qp(n - 2 * l + 1);
            i += 2;
        } else {
            ++i;
        }
    }
    return d;
}

std::vector<int> z_zero(int n) {
    std::vector<int> z;
    for (int i = 0; i < n; ++i) z.push_back(-n + 1 + 2 * i);
    return z;
}

Poly gn_factor(int n) {
    Poly g = Poly::constant(n, RatFuncQ(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g *= Binomial{j, i, qp(1)}.poly(n);
    return g;
}

RatFuncQ psi_prefactor(const Partition& alpha) {
    const int n = alpha.size();
    auto lam = lambda_alpha(alpha);
    auto z0 = z_zero(n);
    int pair = std::inner_product(lam.begin(), lam.end(), z0.begin(), 0);
    return (RatFuncQ(1) - qp(-2)).pow(n) * odd_data(alpha).c_odd * qp(pair) / w_factor(n, qp(-2));
}

Poly main_term_Q(const Partition& alpha) {
    const int n = alpha.size();
    SymTemplate t = c_n_template(n);
    for (int l : odd_data(alpha).i_odd) t.den.push_back({l - 1, l, qp(1)});
    return symmetric_sum(t, lambda_alpha(alpha));
}

Poly psi_explicit(const Partition& alpha) { return main_term_Q(alpha) * psi_prefactor(alpha); }

Poly size2_closed(const Partition& alpha) {
    if (alpha.size() != 2) throw std::invalid_argument("size2_closed needs a pair");
    if (alpha[0] % 2 != 0) {
        int e = (alpha[0] + 1) / 2;
        return Poly::monomial({e, e}, qp(1) * (RatFuncQ(1) - qp(-1)));
    }
    int l1 = alpha[0] / 2, l2 = alpha[1] / 2;
    auto x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    Poly f = Poly::monomial({l1, l2}, RatFuncQ(1)) * (x1 - x2 * qp(-2)) * (x1 - x2 * qp(1));
    Poly g = Poly::monomial({l2, l1}, RatFuncQ(1)) * (x2 - x1 * qp(-2)) * (x2 - x1 * qp(1));
    auto quot = (f - g).exact_div(x1 - x2);
    if (!quot) throw std::logic_error("size-2 numerator not divisible");
    return *quot * (qp(-l1 + l2) / (RatFuncQ(1) + qp(-2)));
}

Poly hl_variant(HLKind kind, const std::vector<int>& lambda) {
    const int n = static_cast<int>(lambda.size());
    SymTemplate t(n);
    RatFuncQ c = kind == HLKind::GL ? qp(-1) : kind == HLKind::A ? qp(-2) : -qp(-1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t.num.push_back({i, j, c});
    t.den = vandermonde(n);
    return symmetric_sum(t, lambda);
}

DeltaClosed delta_closed(const Partition& alpha) {
    const int n = alpha.size();
    auto lam = lambda_alpha(alpha);
    auto z0 = z_zero(n);
    auto od = odd_data(alpha);
    DeltaClosed d;
    d.coeff = od.c_odd * qp(std::inner_product(lam.begin(), lam.end(), z0.begin(), 0));
    d.mono.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) d.mono[static_cast<size_t>(n - 1 - i)] = lam[static_cast<size_t>(i)];
    for (int l : od.i_odd) d.den.push_back({n - l, n - l - 1, qp(1)});
    return d;
}

std::map<std::pair<int, int>, RatFuncQ> delta_t_expansion(const Partition& alpha, int max_v1) {
    if (alpha.size() != 2) throw std::invalid_argument("delta expansion is implemented for n = 2");
    auto d = delta_closed(alpha);
    // x_1 = q^{-1} S T, x_2 = q S, and x_2 - q x_1 = q S (1 - T / q)
    int a = d.mono[0], b = d.mono[1];
    RatFuncQ base = d.coeff * qp(b - a);
    std::map<std::pair<int, int>, RatFuncQ> out;
    if (d.den.empty()) {
        if (a <= max_v1) out[{a, a + b}] = base;
        return out;
    }
    for (int j = 0; a + j <= max_v1; ++j) out[{a + j, a + b - 1}] = base * qp(-1 - j);
    return out;
}

HermMatrix build_gram_check(const Partition& alpha, const RingParams& rp) {
    HermMatrix g = build_gram(alpha, rp);
    const int n = alpha.size();
    QuatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = g(n - 1 - i, n - 1 - j);
    return HermMatrix(m, rp);
}

DeltaDistribution delta_oracle(const Partition& alpha, i64 p, int ell, i64 eps2) {
    if (alpha.size() != 2) throw std::invalid_argument("delta oracle is implemented for n = 2");
    RingParams rp = make_params(p, ell, eps2);
    const QuatMatrix x = build_gram_check(alpha, rp).matrix();
    DeltaDistribution out;
    out.level = ell;
    const i64 mod = rp.modulus, low = mod / p;
    QuatMatrix nu = QuatMatrix::identity(2);
    // nu_12 runs over P / P^{2l}: a, b divisible by p, c, d free
    for (i64 a = 0; a < low; ++a)
        for (i64 b = 0; b < low; ++b)
            for (i64 c = 0; c < mod; ++c)
                for (i64 d = 0; d < mod; ++d) {
                    nu(0, 1) = QuatElem{a * p, b * p, c, d};
                    QuatMatrix m = mat_mul(mat_mul(nu, x, rp), mat_star(nu, rp), rp);
                    out.total += 1;
                    const QuatElem& m00 = m(0, 0);
                    if (m00.b || m00.c || m00.d || m(1, 1).b || m(1, 1).c || m(1, 1).d)
                        throw std::logic_error("diagonal entry outside k");
                    i64 d2 = mod_reduce(m00.a * m(1, 1).a - quat_nrd(m(0, 1), rp), mod);
                    if (mod_reduce(d2 * d2, mod) != matrix_nrd(m, rp)) throw std::logic_error("d_2 mismatch");
                    auto v1 = pi_valuation(m00, rp);
                    int v2 = pval(d2, rp);
                    if (!v1 || v2 >= ell) {
                        out.overflow += 1;
                        continue;
                    }
                    out.counts[{*v1 / 2, v2}] += 1;
                }
    return out;
}

InductionReport verify_induction(const Partition& xi, int order, i64 p, int ell, const CountOptions& opts) {
    if (xi.size() != 2) throw std::invalid_argument("induction check is implemented for (m, n) = (2, 1)");
    const ExactRational q0(p);
    InductionReport rep;

    // LHS: omega(pi^xi; s_1, 0) with x_1 = t / q, x_2 = q, G_2 = q - t
    std::vector<ExactRational> num(static_cast<size_t>(order + 1));
    const Poly psi = psi_explicit(xi);
    for (const auto& [e, c] : psi.terms()) {
        if (e[0] < 0) throw std::domain_error("negative power of t on the left side");
        if (e[0] > order) continue;
        num[static_cast<size_t>(e[0])] += c.eval(q0) * pow(q0, e[1] - e[0]);
    }
    rep.lhs.assign(static_cast<size_t>(order + 1), ExactRational(0));
    for (int k = 0; k <= order; ++k)
        for (int j = 0; j <= k; ++j) rep.lhs[k] += num[static_cast<size_t>(j)] * pow(q0, -(k - j) - 1);

    // RHS: (w_1 w_1 / w_2)(q^{-2}) sum_e mu^pr(pi^(2e), pi^xi) / mu(pi^(2e), pi^(2e)) t^e
    ExactRational scale = (w_factor(1, qp(-2)).pow(2) / w_factor(2, qp(-2))).eval(q0);
    for (int e = 0; e <= order; ++e) {
        Partition a({2 * e});
        auto series = density_limit(gram_builder(a), gram_builder(xi), p, {ell}, true, CountMethod::Enumerate, 0, opts);
        rep.densities.push_back(series.value());
        rep.rhs.push_back(scale * series.value() / density_self_closed(a).eval(q0));
    }
    rep.agree = rep.lhs == rep.rhs;
    return rep;
}

std::vector<ExactRational> z_to_s(const std::vector<ExactRational>& z) {
    const int n = static_cast<int>(z.size());
    std::vector<ExactRational> s(z.size());
    for (int i = 0; i + 1 < n; ++i) s[i] = -z[i] + z[i + 1] - 2;
    if (n) s[n - 1] = -z[n - 1] + (n - 1);
    return s;
}

std::vector<ExactRational> s_to_z(const std::vector<ExactRational>& s) {
    const int n = static_cast<int>(s.size());
    std::vector<ExactRational> z(s.size());
    if (n == 0) return z;
    z[n - 1] = ExactRational(n - 1) - s[n - 1];
    for (int i = n - 2; i >= 0; --i) z[i] = z[i + 1] - 2 - s[i];
    return z;
}

}  // namespace qherm
