#pragma once

// Symmetric Laurent polynomials in x_1..x_n over Q(q): orbit sums of
// rational templates, conversion to elementary symmetric coordinates, and
// Groebner-basis ideal membership after specializing q.

#include <map>
#include <string>
#include <vector>

#include "qherm/exact.hpp"
#include "qherm/laurent.hpp"

namespace qherm {

using Poly = LaurentPoly<RatFuncQ>;

/// x_i - c * x_j (0-based indices, i != j, c != 0).
struct Binomial {
    int i = 0, j = 1;
    RatFuncQ c;

    Poly poly(int arity) const;
    bool operator==(const Binomial& o) const { return i == o.i && j == o.j && c == o.c; }
};

/// scalar * x^mono * prod(num) / prod(den).
struct SymTemplate {
    int n = 1;
    RatFuncQ scalar{1};
    Exponent mono;
    std::vector<Binomial> num, den;

    explicit SymTemplate(int arity) : n(arity), mono(static_cast<size_t>(arity), 0) {}
    /// Drops binomials occurring both upstairs and downstairs.
    void cancel_common();
};

/// The factors x_i - x_j, i < j.
std::vector<Binomial> vandermonde(int n);

/// sum over sigma in S_n of sigma(x^mu * t). The orbit terms are brought over
/// the least common multiple of the permuted denominators, summed and
/// divided once. Throws std::domain_error if the division is not exact.
Poly symmetric_sum(const SymTemplate& t, const Exponent& mu);

bool is_symmetric(const Poly& f);

/// sum_{i=1}^n (-1)^{i-1} e_i * P(t, lam - i e_l) with l 0-based. Equals
/// P(t, lam) whenever lam_l >= n, because x_l is a root of prod_k (X - x_k).
Poly reduction_combination(const SymTemplate& t, const Exponent& lam, int l);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> permutations(int n);

/// Polynomial in s_1..s_n (exponent vectors index the s_i) times s_n^{-sn_inv}.
struct ElemSymExpr {
    int n = 0;
    Poly poly;
    int sn_inv = 0;

    std::string to_string() const;
    bool operator==(const ElemSymExpr&) const = default;
};

/// e_k(x_1..x_n) for k = 1..n.
Poly elementary(int n, int k);

/// Throws std::invalid_argument for non-symmetric input.
ElemSymExpr to_elementary(const Poly& f);
Poly from_elementary(const ElemSymExpr& e);

// ---- Groebner bases over Q ----

enum class MonomialOrder { Grevlex, Lex };

/// Multivariate polynomial over Q with nonnegative exponents.
class GPoly {
public:
    using Terms = std::map<Exponent, ExactRational>;

    GPoly() = default;
    explicit GPoly(int arity) : arity_(arity) {}
    GPoly(int arity, Terms terms);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    void add_term(const Exponent& e, const ExactRational& c);
    /// Leading exponent and coefficient under the given order.
    std::pair<Exponent, ExactRational> lead(MonomialOrder ord) const;

    GPoly& operator+=(const GPoly& o);
    GPoly& operator-=(const GPoly& o);
    friend GPoly operator+(GPoly a, const GPoly& b) { return a += b; }
    friend GPoly operator-(GPoly a, const GPoly& b) { return a -= b; }
    friend GPoly operator*(const GPoly& a, const GPoly& b);
    GPoly scaled(const ExactRational& c, const Exponent& shift) const;
    GPoly monic(MonomialOrder ord) const;
    bool operator==(const GPoly& o) const { return terms_ == o.terms_; }

    std::string to_string(const char* var = "s") const;

private:
    int arity_ = 0;
    Terms terms_;
};

/// The s-polynomial part of e with q set to q0.
GPoly specialize(const ElemSymExpr& e, const ExactRational& q0);

bool mono_less(const Exponent& a, const Exponent& b, MonomialOrder ord);

struct IdealBasis {
    int arity = 0;
    MonomialOrder order = MonomialOrder::Grevlex;
    std::vector<GPoly> generators;
    std::vector<GPoly> basis;  // reduced, monic, sorted by leading term
};

IdealBasis buchberger(const std::vector<GPoly>& gens, MonomialOrder ord = MonomialOrder::Grevlex);
GPoly normal_form(const GPoly& f, const std::vector<GPoly>& basis, MonomialOrder ord);
/// Throws std::invalid_argument on arity mismatch.
bool ideal_member(const GPoly& f, const IdealBasis& ideal);

}  // namespace qherm
