#pragma once

// Explicit spherical functions Psi(pi^alpha; z) = G_n(z) * omega(pi^alpha; z)
// as symmetric Laurent polynomials in x_i = q^{z_i}, their size-2 closed
// form, the delta integral with a finite enumeration oracle, and a
// truncated check of the induction formula for (m, n) = (2, 1).

#include <map>
#include <utility>
#include <vector>

#include "qherm/density.hpp"
#include "qherm/sympoly.hpp"

namespace qherm {

/// lambda_i = floor((alpha_i + 1) / 2).
std::vector<int> lambda_alpha(const Partition& alpha);

struct OddData {
    std::vector<int> i_odd;  // 1-based first members of odd pairs
    RatFuncQ c_odd;          // (1 - q^{-1})^k q^{sum(n - 2l + 1)}
};
OddData odd_data(const Partition& alpha);

/// (-n+1, -n+3, ..., n-1)
std::vector<int> z_zero(int n);
/// prod_{i<j} (x_j - q x_i)
Poly gn_factor(int n);

/// c_n(x) = prod_{i<j} (x_i - q x_j)(x_i - q^{-2} x_j) / (x_i - x_j)
SymTemplate c_n_template(int n);

/// (1 - q^{-2})^n c_odd q^{<lambda, z_0>} / w_n(q^{-2})
RatFuncQ psi_prefactor(const Partition& alpha);
/// The orbit sum of x^lambda c_n(x) / prod_{l in I_odd}(x_l - q x_{l+1}).
Poly main_term_Q(const Partition& alpha);
Poly psi_explicit(const Partition& alpha);

/// Numerator N with omega(pi^alpha; z) = N / (x_2 - q x_1), from the
/// two-term size-2 formulas.
Poly size2_closed(const Partition& alpha);

enum class HLKind { GL, A, H };
/// sum_sigma sigma(x^lambda prod_{i<j} f(x_i, x_j) / (x_i - x_j)) with f equal
/// to x_i - q^{-1} x_j, x_i - q^{-2} x_j, x_i + q^{-1} x_j respectively.
Poly hl_variant(HLKind kind, const std::vector<int>& lambda);

/// coeff * x^mono / prod(den): the value of delta(check pi^alpha; z).
struct DeltaClosed {
    RatFuncQ coeff;
    Exponent mono;
    std::vector<Binomial> den;
};
DeltaClosed delta_closed(const Partition& alpha);

/// n = 2 only. Coefficients of T^{v1} S^{v2} with T = q^{-s_1}, S = q^{-s_2},
/// for v1 <= max_v1; key is (v1, v2).
std::map<std::pair<int, int>, RatFuncQ> delta_t_expansion(const Partition& alpha, int max_v1);

/// Distribution of (v(d_1), v(d_2)) over nu in the unipotent Iwahori
/// coordinate P / P^{2l} for x = check pi^alpha, n = 2. Values whose
/// valuation cannot be resolved at level l land in overflow.
struct DeltaDistribution {
    int level = 0;
    BigInt total;
    std::map<std::pair<int, int>, BigInt> counts;
    BigInt overflow;
};
DeltaDistribution delta_oracle(const Partition& alpha, i64 p, int ell, i64 eps2 = 0);

/// check pi^alpha = j pi^alpha j with j the antidiagonal permutation.
HermMatrix build_gram_check(const Partition& alpha, const RingParams& rp);

struct InductionReport {
    std::vector<ExactRational> lhs, rhs;  // coefficients of t^0..t^N, t = q^{-s_1}
    std::vector<ExactRational> densities;  // mu^pr(pi^(2e), pi^xi) used on the right
    bool agree = false;
};
/// (m, n) = (2, 1) at q = p with densities counted at level ell.
InductionReport verify_induction(const Partition& xi, int order, i64 p, int ell, const CountOptions& opts = {});

/// s_i = -z_i + z_{i+1} - 2 (i < n), s_n = -z_n + n - 1.
std::vector<ExactRational> z_to_s(const std::vector<ExactRational>& z);
std::vector<ExactRational> s_to_z(const std::vector<ExactRational>& s);

}  // namespace qherm
