#pragma once

// Arithmetic in O/P^{2l}, where O is the maximal order of the division
// quaternion algebra over Q_p. An element a + b*eps + c*Pi + d*Pi*eps is kept
// as four residues mod p^l, with eps^2 = eps2, Pi^2 = p and Pi*eps = -eps*Pi.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qherm {

using i64 = std::int64_t;

struct RingParams {
    i64 p = 3;
    int ell = 1;
    i64 eps2 = 2;
    i64 modulus = 3;  // p^ell

    bool operator==(const RingParams&) const = default;
};

/// Validates p (odd prime), ell >= 1 and eps2 (nonresidue mod p). With
/// eps2 == 0 the smallest positive nonresidue is chosen.
RingParams make_params(i64 p, int ell, i64 eps2 = 0);
i64 smallest_nonresidue(i64 p);
bool is_odd_prime(i64 p);

/// Exponent of p in x mod p^ell, capped at ell (so 0 has valuation ell).
int pval(i64 x, const RingParams& rp);
i64 mod_reduce(i64 x, i64 m);

struct QuatElem {
    i64 a = 0, b = 0, c = 0, d = 0;

    static QuatElem scalar(i64 v) { return {v, 0, 0, 0}; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool operator==(const QuatElem&) const = default;
};

QuatElem reduce(const QuatElem& x, const RingParams& rp);
QuatElem quat_add(const QuatElem& x, const QuatElem& y, const RingParams& rp);
QuatElem quat_sub(const QuatElem& x, const QuatElem& y, const RingParams& rp);
QuatElem quat_neg(const QuatElem& x, const RingParams& rp);
QuatElem quat_mul(const QuatElem& x, const QuatElem& y, const RingParams& rp);
QuatElem quat_conj(const QuatElem& x, const RingParams& rp);
i64 quat_nrd(const QuatElem& x, const RingParams& rp);
i64 quat_trd(const QuatElem& x, const RingParams& rp);

/// Largest v <= 2l-1 with x in P^v; nullopt when x lies in P^{2l}.
std::optional<int> pi_valuation(const QuatElem& x, const RingParams& rp);

/// The element with index k in [0, p^{4l}) of a fixed enumeration of O/P^{2l}.
QuatElem decode_elem(i64 k, const RingParams& rp);

class QuatMatrix {
public:
    QuatMatrix() = default;
    QuatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {}

    static QuatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    QuatElem& operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
    const QuatElem& operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }
    bool operator==(const QuatMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<QuatElem> data_;
};

QuatMatrix mat_mul(const QuatMatrix& x, const QuatMatrix& y, const RingParams& rp);
QuatMatrix mat_sub(const QuatMatrix& x, const QuatMatrix& y, const RingParams& rp);
/// Conjugate transpose.
QuatMatrix mat_star(const QuatMatrix& x, const RingParams& rp);
QuatMatrix mat_reduce(const QuatMatrix& x, const RingParams& rp);

/// Square matrix with A* = A and scalar diagonal.
class HermMatrix {
public:
    HermMatrix() = default;
    /// Throws std::invalid_argument when the hermitian invariant fails.
    HermMatrix(QuatMatrix m, const RingParams& rp);

    int size() const { return m_.rows(); }
    const QuatMatrix& matrix() const { return m_; }
    const QuatElem& operator()(int i, int j) const { return m_(i, j); }
    bool is_diagonal() const;

private:
    QuatMatrix m_;
};

bool is_hermitian(const QuatMatrix& m, const RingParams& rp);

/// A[u] = u* A u.
HermMatrix herm_apply(const HermMatrix& a, const QuatMatrix& u, const RingParams& rp);

/// Rank of u mod P over the residue field F_{p^2}.
int residue_rank(const QuatMatrix& u, const RingParams& rp);

/// Element of the commutative ring (Z/p^l)[eps]/(eps^2 - eps2), x + y*eps.
struct EpsElem {
    i64 x = 0, y = 0;
    bool operator==(const EpsElem&) const = default;
};

/// Image of the n x n quaternion matrix under the 2n x 2n splitting embedding.
std::vector<std::vector<EpsElem>> phi_embed(const QuatMatrix& a, const RingParams& rp);

/// Division-free determinant over (Z/p^l)[eps]. Berkowitz always; the
/// permutation expansion is exposed for cross-checking small sizes.
EpsElem det_berkowitz(const std::vector<std::vector<EpsElem>>& m, const RingParams& rp);
EpsElem det_permutation(const std::vector<std::vector<EpsElem>>& m, const RingParams& rp);

/// Raised when the eps-part of the reduced norm does not vanish.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reduced norm det(phi_n(A)) mod p^l.
i64 matrix_nrd(const QuatMatrix& a, const RingParams& rp);

/// C in H_n(P, l): diagonal in p^l, off-diagonal in P^{2l-1}.
bool in_congruence(const QuatMatrix& c, const RingParams& rp);

}  // namespace qherm
