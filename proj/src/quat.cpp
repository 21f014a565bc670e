#include "qherm/quat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qherm {

bool is_odd_prime(i64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (i64 k = 3; k * k <= p; k += 2)
        if (p % k == 0) return false;
    return true;
}

namespace {

i64 powmod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

bool is_nonresidue(i64 x, i64 p) {
    x = mod_reduce(x, p);
    return x != 0 && powmod(x, (p - 1) / 2, p) == p - 1;
}

}  // namespace

i64 smallest_nonresidue(i64 p) {
    for (i64 x = 2; x < p; ++x)
        if (is_nonresidue(x, p)) return x;
    throw std::invalid_argument("no nonresidue mod " + std::to_string(p));
}

RingParams make_params(i64 p, int ell, i64 eps2) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
    if (ell < 1) throw std::invalid_argument("level must be >= 1");
    RingParams rp;
    rp.p = p;
    rp.ell = ell;
    rp.modulus = 1;
    for (int i = 0; i < ell; ++i) {
        if (rp.modulus > (i64(1) << 30) / p) throw std::invalid_argument("p^ell too large");
        rp.modulus *= p;
    }
    if (eps2 == 0) eps2 = smallest_nonresidue(p);
    if (!is_nonresidue(eps2, p)) throw std::invalid_argument("eps2 must be a nonresidue mod p");
    rp.eps2 = mod_reduce(eps2, rp.modulus);
    return rp;
}

i64 mod_reduce(i64 x, i64 m) {
    x %= m;
    return x < 0 ? x + m : x;
}

int pval(i64 x, const RingParams& rp) {
    x = mod_reduce(x, rp.modulus);
    if (x == 0) return rp.ell;
    int v = 0;
    while (x % rp.p == 0) {
        x /= rp.p;
        ++v;
    }
    return v;
}

QuatElem reduce(const QuatElem& x, const RingParams& rp) {
    i64 m = rp.modulus;
    return {mod_reduce(x.a, m), mod_reduce(x.b, m), mod_reduce(x.c, m), mod_reduce(x.d, m)};
}

QuatElem quat_add(const QuatElem& x, const QuatElem& y, const RingParams& rp) {
    return reduce({x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}, rp);
}

QuatElem quat_sub(const QuatElem& x, const QuatElem& y, const RingParams& rp) {
    return reduce({x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}, rp);
}

QuatElem quat_neg(const QuatElem& x, const RingParams& rp) { return reduce({-x.a, -x.b, -x.c, -x.d}, rp); }

// x = al + Pi*be with al = a + b eps, be = c + d eps. Since eps*Pi = Pi*conj(eps),
// (al + Pi be)(al' + Pi be') = (al al' + p conj(be) be') + Pi (conj(al) be' + be al').
QuatElem quat_mul(const QuatElem& x, const QuatElem& y, const RingParams& rp) {
    const i64 m = rp.modulus, e = rp.eps2, p = rp.p;
    auto mm = [m](i64 u, i64 v) { return u * v % m; };
    // al al'
    i64 r0 = mm(x.a, y.a) + mm(e, mm(x.b, y.b));
    i64 r1 = mm(x.a, y.b) + mm(x.b, y.a);
    // conj(be) be' = (c - d eps)(c' + d' eps)
    i64 s0 = mm(x.c, y.c) - mm(e, mm(x.d, y.d));
    i64 s1 = mm(x.c, y.d) - mm(x.d, y.c);
    r0 += mm(p, mod_reduce(s0, m));
    r1 += mm(p, mod_reduce(s1, m));
    // conj(al) be' + be al'
    i64 t0 = mm(x.a, y.c) - mm(e, mm(x.b, y.d)) + mm(x.c, y.a) + mm(e, mm(x.d, y.b));
    i64 t1 = mm(x.a, y.d) - mm(x.b, y.c) + mm(x.c, y.b) + mm(x.d, y.a);
    return {mod_reduce(r0, m), mod_reduce(r1, m), mod_reduce(t0, m), mod_reduce(t1, m)};
}

QuatElem quat_conj(const QuatElem& x, const RingParams& rp) { return reduce({x.a, -x.b, -x.c, -x.d}, rp); }

i64 quat_nrd(const QuatElem& x, const RingParams& rp) {
    const i64 m = rp.modulus;
    i64 u = (x.a * x.a - rp.eps2 * (x.b * x.b % m)) % m;
    i64 v = (x.c * x.c - rp.eps2 * (x.d * x.d % m)) % m;
    return mod_reduce(u - rp.p * mod_reduce(v, m), m);
}

i64 quat_trd(const QuatElem& x, const RingParams& rp) { return mod_reduce(2 * x.a, rp.modulus); }

std::optional<int> pi_valuation(const QuatElem& x, const RingParams& rp) {
    int va = std::min(pval(x.a, rp), pval(x.b, rp));
    int vc = std::min(pval(x.c, rp), pval(x.d, rp));
    int v = std::min(2 * va, 2 * vc + 1);
    if (v >= 2 * rp.ell) return std::nullopt;
    return v;
}

QuatElem decode_elem(i64 k, const RingParams& rp) {
    const i64 m = rp.modulus;
    QuatElem x;
    x.a = k % m;
    k /= m;
    x.b = k % m;
    k /= m;
    x.c = k % m;
    x.d = k / m;
    return x;
}

// ---- matrices ----

QuatMatrix QuatMatrix::identity(int n) {
    QuatMatrix r(n, n);
    for (int i = 0; i < n; ++i) r(i, i) = QuatElem::scalar(1);
    return r;
}

QuatMatrix mat_mul(const QuatMatrix& x, const QuatMatrix& y, const RingParams& rp) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix dimension mismatch");
    QuatMatrix r(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j) {
            QuatElem acc;
            for (int k = 0; k < x.cols(); ++k) acc = quat_add(acc, quat_mul(x(i, k), y(k, j), rp), rp);
            r(i, j) = acc;
        }
    return r;
}

QuatMatrix mat_sub(const QuatMatrix& x, const QuatMatrix& y, const RingParams& rp) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix dimension mismatch");
    QuatMatrix r(x.rows(), x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r(i, j) = quat_sub(x(i, j), y(i, j), rp);
    return r;
}

QuatMatrix mat_star(const QuatMatrix& x, const RingParams& rp) {
    QuatMatrix r(x.cols(), x.rows());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r(j, i) = quat_conj(x(i, j), rp);
    return r;
}

QuatMatrix mat_reduce(const QuatMatrix& x, const RingParams& rp) {
    QuatMatrix r = x;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) r(i, j) = reduce(x(i, j), rp);
    return r;
}

bool is_hermitian(const QuatMatrix& m, const RingParams& rp) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        QuatElem d = reduce(m(i, i), rp);
        if (d.b || d.c || d.d) return false;
        for (int j = i + 1; j < m.cols(); ++j)
            if (!(reduce(m(i, j), rp) == quat_conj(m(j, i), rp))) return false;
    }
    return true;
}

HermMatrix::HermMatrix(QuatMatrix m, const RingParams& rp) : m_(mat_reduce(m, rp)) {
    if (!is_hermitian(m_, rp)) throw std::invalid_argument("matrix is not hermitian");
}

bool HermMatrix::is_diagonal() const {
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (i != j && !m_(i, j).is_zero()) return false;
    return true;
}

HermMatrix herm_apply(const HermMatrix& a, const QuatMatrix& u, const RingParams& rp) {
    if (a.size() != u.rows()) throw std::invalid_argument("herm_apply dimension mismatch");
    return HermMatrix(mat_mul(mat_star(u, rp), mat_mul(a.matrix(), u, rp), rp), rp);
}

// ---- residue field F_{p^2} = F_p[eps] ----

namespace {

struct Fp2 {
    i64 x = 0, y = 0;
};

struct Fp2Ops {
    i64 p, e;
    Fp2 mul(Fp2 u, Fp2 v) const {
        return {mod_reduce(u.x * v.x + e * (u.y * v.y % p), p), mod_reduce(u.x * v.y + u.y * v.x, p)};
    }
    Fp2 sub(Fp2 u, Fp2 v) const { return {mod_reduce(u.x - v.x, p), mod_reduce(u.y - v.y, p)}; }
    Fp2 inv(Fp2 u) const {
        i64 n = mod_reduce(u.x * u.x - e * (u.y * u.y % p), p);
        i64 ni = powmod(n, p - 2, p);
        return {u.x * ni % p, mod_reduce(-u.y * ni, p)};
    }
};

}  // namespace

int residue_rank(const QuatMatrix& u, const RingParams& rp) {
    Fp2Ops f{rp.p, mod_reduce(rp.eps2, rp.p)};
    std::vector<std::vector<Fp2>> m(static_cast<size_t>(u.rows()), std::vector<Fp2>(static_cast<size_t>(u.cols())));
    for (int i = 0; i < u.rows(); ++i)
        for (int j = 0; j < u.cols(); ++j) m[i][j] = {mod_reduce(u(i, j).a, rp.p), mod_reduce(u(i, j).b, rp.p)};
    int rank = 0;
    for (int col = 0; col < u.cols() && rank < u.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < u.rows(); ++i)
            if (m[i][col].x || m[i][col].y) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        Fp2 inv = f.inv(m[rank][col]);
        for (int i = rank + 1; i < u.rows(); ++i) {
            if (!m[i][col].x && !m[i][col].y) continue;
            Fp2 factor = f.mul(m[i][col], inv);
            for (int j = col; j < u.cols(); ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

// ---- reduced norm of matrices ----

namespace {

struct EpsOps {
    i64 m, e;
    EpsElem add(EpsElem u, EpsElem v) const { return {mod_reduce(u.x + v.x, m), mod_reduce(u.y + v.y, m)}; }
    EpsElem sub(EpsElem u, EpsElem v) const { return {mod_reduce(u.x - v.x, m), mod_reduce(u.y - v.y, m)}; }
    EpsElem neg(EpsElem u) const { return {mod_reduce(-u.x, m), mod_reduce(-u.y, m)}; }
    EpsElem mul(EpsElem u, EpsElem v) const {
        return {mod_reduce(u.x * v.x % m + e * (u.y * v.y % m), m), mod_reduce(u.x * v.y + u.y * v.x, m)};
    }
};

}  // namespace

// phi(al + Pi be) = [[al, p*conj(be)], [be, conj(al)]]
std::vector<std::vector<EpsElem>> phi_embed(const QuatMatrix& a, const RingParams& rp) {
    if (a.rows() != a.cols()) throw std::invalid_argument("phi_embed needs a square matrix");
    const int n = a.rows();
    const i64 m = rp.modulus;
    std::vector<std::vector<EpsElem>> out(static_cast<size_t>(2 * n), std::vector<EpsElem>(static_cast<size_t>(2 * n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QuatElem x = reduce(a(i, j), rp);
            out[2 * i][2 * j] = {x.a, x.b};
            out[2 * i][2 * j + 1] = {mod_reduce(rp.p * x.c, m), mod_reduce(-rp.p * x.d, m)};
            out[2 * i + 1][2 * j] = {x.c, x.d};
            out[2 * i + 1][2 * j + 1] = {x.a, mod_reduce(-x.b, m)};
        }
    return out;
}

EpsElem det_permutation(const std::vector<std::vector<EpsElem>>& a, const RingParams& rp) {
    EpsOps ops{rp.modulus, rp.eps2};
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    EpsElem total;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        EpsElem t{1 % rp.modulus, 0};
        for (int i = 0; i < n; ++i) t = ops.mul(t, a[i][perm[i]]);
        total = inversions % 2 ? ops.sub(total, t) : ops.add(total, t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Berkowitz: for the leading (r+1)x(r+1) block with last row R, last column S,
// corner a and leading block M, the characteristic vector is multiplied by
// the lower-triangular Toeplitz matrix with first column
// (1, -a, -RS, -RMS, -RM^2S, ...).
EpsElem det_berkowitz(const std::vector<std::vector<EpsElem>>& a, const RingParams& rp) {
    EpsOps ops{rp.modulus, rp.eps2};
    const int n = static_cast<int>(a.size());
    if (n == 0) return {1 % rp.modulus, 0};
    std::vector<EpsElem> vect = {{1 % rp.modulus, 0}, ops.neg(a[0][0])};
    for (int r = 1; r < n; ++r) {
        std::vector<EpsElem> col(static_cast<size_t>(r + 2));
        col[0] = {1 % rp.modulus, 0};
        col[1] = ops.neg(a[r][r]);
        std::vector<EpsElem> s(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) s[i] = a[i][r];
        for (int k = 2; k < r + 2; ++k) {
            EpsElem rs;
            for (int i = 0; i < r; ++i) rs = ops.add(rs, ops.mul(a[r][i], s[i]));
            col[k] = ops.neg(rs);
            std::vector<EpsElem> ms(static_cast<size_t>(r));
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) ms[i] = ops.add(ms[i], ops.mul(a[i][j], s[j]));
            s = std::move(ms);
        }
        std::vector<EpsElem> next(static_cast<size_t>(r + 2));
        for (int i = 0; i < r + 2; ++i)
            for (int j = 0; j <= std::min(i, r); ++j) next[i] = ops.add(next[i], ops.mul(col[i - j], vect[j]));
        vect = std::move(next);
    }
    return n % 2 ? ops.neg(vect[n]) : vect[n];
}

i64 matrix_nrd(const QuatMatrix& a, const RingParams& rp) {
    auto phi = phi_embed(a, rp);
    EpsElem d = phi.size() <= 4 ? det_permutation(phi, rp) : det_berkowitz(phi, rp);
    if (d.y != 0) throw PrecisionError("reduced norm has a nonvanishing eps-part; raise the level");
    return d.x;
}

bool in_congruence(const QuatMatrix& c, const RingParams& rp) {
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j) {
            QuatElem x = reduce(c(i, j), rp);
            if (i == j) {
                if (!x.is_zero()) return false;
            } else {
                auto v = pi_valuation(x, rp);
                if (v && *v < 2 * rp.ell - 1) return false;
            }
        }
    return true;
}

}  // namespace qherm
