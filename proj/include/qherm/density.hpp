#pragma once

// Local densities of quaternion hermitian forms: brute-force counting of
// N_l(B, A) over O/P^{2l}, a convolution shortcut for diagonal A, and the
// closed formulas for self-densities.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qherm/exact.hpp"
#include "qherm/quat.hpp"

namespace qherm {

/// Weakly decreasing integer tuple in which every odd value occurs an even
/// number of times.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless the tuple lies in Lambda_n.
    explicit Partition(std::vector<int> parts);

    static bool valid(const std::vector<int>& parts);
    static Partition parse(const std::string& text);  // "2,0" or "-1,-1"

    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    int weight() const;  // |alpha|
    bool all_even() const;
    Partition shifted(int by) const;  // alpha + (by, ..., by)
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Block-diagonal representative pi^alpha: p^e on the diagonal for an even
/// entry 2e, and [[0, p^e Pi], [-p^e Pi, 0]] for a pair of odd entries 2e+1.
/// Entries at or above 2l give the zero class. Negative entries are rejected.
HermMatrix build_gram(const Partition& alpha, const RingParams& rp);
HermMatrix zero_form(int n, const RingParams& rp);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CountOptions {
    std::uint64_t budget = std::uint64_t(1) << 36;
    int threads = 1;
    /// For n = m = 2 (non-primitive), count second columns through cached
    /// histograms of the linear off-diagonal condition instead of pairing
    /// residue classes directly.
    bool linear_pairs = true;
};

/// #{u in M_{m,n}(O/P^{2l}) : A[u] - B in H_n(P, l)}, restricted to u of full
/// residue rank when primitive is set.
BigInt count_reps(const HermMatrix& b, const HermMatrix& a, const RingParams& rp, bool primitive,
                  const CountOptions& opts = {});

/// Same value for n = 1 and diagonal A, by convolving histograms of Nrd.
BigInt count_reps_convolved(const HermMatrix& b, const HermMatrix& a, const RingParams& rp, bool primitive);

/// l*n*(4m - 2n + 1) + n(n - 1).
long normalization_exponent(int ell, int m, int n);

struct DensityResult {
    BigInt count;
    int level = 0;
    ExactRational normalized;
    bool primitive = false;
};

enum class CountMethod { Enumerate, Convolve };

using FormBuilder = std::function<HermMatrix(const RingParams&)>;
FormBuilder gram_builder(const Partition& alpha);
FormBuilder zero_builder(int n);

/// Normalized counts at each level; stable() compares the last two.
struct DensitySeries {
    std::vector<DensityResult> levels;
    bool stable() const;
    const ExactRational& value() const { return levels.back().normalized; }
};

DensitySeries density_limit(const FormBuilder& b, const FormBuilder& a, i64 p, const std::vector<int>& ells,
                            bool primitive, CountMethod method = CountMethod::Enumerate, i64 eps2 = 0,
                            const CountOptions& opts = {});

// ---- closed formulas (q symbolic) ----

/// mu(pi^alpha, pi^alpha).
RatFuncQ density_self_closed(const Partition& alpha);
/// mu(1_n, 1_n) = w_n(-q^{-1}).
RatFuncQ density_unit_closed(int n);
/// mu^pr(<1>, 1_n) = 1 - (-q^{-1})^n.
RatFuncQ density_unit_primitive(int n);
/// mu^pr(0, h_t) = q(1 - q^{-4t}).
RatFuncQ density_zero_ht(int t);
/// mu(h_t, h_t) = q^{4t^2} w_t(q^{-4}).
RatFuncQ density_ht_closed(int t);

/// Multiply by q^{e n (2n - 1)}.
RatFuncQ apply_shift(const RatFuncQ& value, int e, int n);
DensityResult apply_shift(const DensityResult& value, int e, int n, i64 p);

/// Right-hand side of the decomposition rule for alpha = (gamma, beta) with
/// beta the last n entries: q^{2(m-n)|beta|} mu(pi^beta) mu(pi^gamma).
RatFuncQ decomposition_rhs(const Partition& alpha, int n);
bool decomposition_applies(const Partition& alpha, int n);

/// Witness beta in Lambda_{n-1}^+ for alpha in Lambda_n^+.
Partition key_beta(const Partition& alpha);

/// n(alpha) = sum (i - 1) alpha_i.
long partition_n(const Partition& alpha);

}  // namespace qherm
