#include <doctest.h>

#include <random>

#include "qherm/quat.hpp"

using namespace qherm;

namespace {

const QuatElem kOne{1, 0, 0, 0}, kEps{0, 1, 0, 0}, kPi{0, 0, 1, 0};

std::vector<QuatElem> all_elems(const RingParams& rp) {
    std::vector<QuatElem> v;
    i64 count = rp.modulus * rp.modulus * rp.modulus * rp.modulus;
    for (i64 k = 0; k < count; ++k) v.push_back(decode_elem(k, rp));
    return v;
}

}  // namespace

TEST_CASE("defining relations") {
    RingParams rp = make_params(3, 2);
    CHECK(rp.eps2 == 2);
    CHECK(quat_mul(kPi, kEps, rp) == QuatElem{0, 0, 0, 1});
    CHECK(quat_mul(kEps, kPi, rp) == reduce({0, 0, 0, -1}, rp));
    CHECK(quat_mul(kEps, kEps, rp) == QuatElem{2, 0, 0, 0});
    CHECK(quat_mul(kPi, kPi, rp) == QuatElem{3, 0, 0, 0});
    CHECK_THROWS(make_params(9, 1));
    CHECK_THROWS(make_params(5, 1, 4));
}

TEST_CASE("conjugation, norm and trace") {
    RingParams rp = make_params(3, 1);
    auto elems = all_elems(rp);
    QuatElem x{1, 2, 0, 1};
    CHECK(quat_conj(x, rp) == reduce({1, -2, 0, -1}, rp));
    CHECK(quat_conj(quat_conj(x, rp), rp) == x);
    CHECK(quat_nrd({1, 1, 0, 0}, rp) == mod_reduce(1 - rp.eps2, rp.modulus));
    RingParams rp2 = make_params(3, 2);
    CHECK(quat_nrd(kPi, rp2) == 9 - 3);
    CHECK(quat_trd(kEps, rp) == 0);
    CHECK(quat_trd(kOne, rp2) == 2);

    for (const auto& u : elems) {
        QuatElem uu = quat_mul(u, quat_conj(u, rp), rp);
        CHECK((uu.b == 0 && uu.c == 0 && uu.d == 0 && uu.a == quat_nrd(u, rp)));
        for (const auto& v : elems) {
            QuatElem uv = quat_mul(u, v, rp);
            if (!(quat_conj(uv, rp) == quat_mul(quat_conj(v, rp), quat_conj(u, rp), rp))) FAIL("anti-automorphism");
            if (quat_nrd(uv, rp) != quat_nrd(u, rp) * quat_nrd(v, rp) % rp.modulus) FAIL("multiplicativity");
            if (quat_trd(uv, rp) != quat_trd(quat_mul(v, u, rp), rp)) FAIL("trace symmetry");
        }
    }
}

TEST_CASE("associativity at level 2") {
    RingParams rp = make_params(3, 2);
    std::mt19937 gen(7);
    std::uniform_int_distribution<i64> dist(0, rp.modulus - 1);
    auto rnd = [&] { return QuatElem{dist(gen), dist(gen), dist(gen), dist(gen)}; };
    for (int t = 0; t < 200; ++t) {
        QuatElem x = rnd(), y = rnd(), z = rnd();
        CHECK(quat_mul(quat_mul(x, y, rp), z, rp) == quat_mul(x, quat_mul(y, z, rp), rp));
    }
}

TEST_CASE("Pi-adic valuation") {
    RingParams rp = make_params(3, 2);
    CHECK(pi_valuation(kPi, rp) == 1);
    CHECK(pi_valuation({3, 0, 0, 0}, rp) == 2);
    CHECK(pi_valuation({0, 0, 3, 0}, rp) == 3);
    CHECK_FALSE(pi_valuation({9, 0, 0, 0}, rp).has_value());
    CHECK(pi_valuation(kOne, rp) == 0);

    std::mt19937 gen(11);
    std::uniform_int_distribution<i64> dist(0, rp.modulus - 1);
    for (int t = 0; t < 300; ++t) {
        QuatElem x{dist(gen), dist(gen), dist(gen), dist(gen)}, y{dist(gen), dist(gen), dist(gen), dist(gen)};
        auto vx = pi_valuation(x, rp), vy = pi_valuation(y, rp);
        if (vx && vy && *vx + *vy < 2 * rp.ell) CHECK(pi_valuation(quat_mul(x, y, rp), rp) == *vx + *vy);
    }
}

TEST_CASE("hermitian forms") {
    RingParams rp = make_params(3, 2);
    QuatMatrix h(2, 2);
    h(0, 1) = kPi;
    h(1, 0) = quat_neg(kPi, rp);
    HermMatrix h1(h, rp);
    CHECK(herm_apply(h1, QuatMatrix::identity(2), rp).matrix() == h1.matrix());

    QuatMatrix e1(2, 1);
    e1(0, 0) = kOne;
    CHECK(herm_apply(h1, e1, rp)(0, 0).is_zero());

    HermMatrix one(QuatMatrix::identity(1), rp);
    QuatMatrix x(1, 1);
    x(0, 0) = {2, 1, 1, 0};
    CHECK(herm_apply(one, x, rp)(0, 0).a == quat_nrd(x(0, 0), rp));

    QuatMatrix bad(1, 1);
    bad(0, 0) = kEps;
    CHECK_THROWS(HermMatrix(bad, rp));

    // A[uv] = (A[u])[v]
    std::mt19937 gen(3);
    std::uniform_int_distribution<i64> dist(0, rp.modulus - 1);
    QuatMatrix u(2, 2), v(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            u(i, j) = {dist(gen), dist(gen), dist(gen), dist(gen)};
            v(i, j) = {dist(gen), dist(gen), dist(gen), dist(gen)};
        }
    CHECK(herm_apply(h1, mat_mul(u, v, rp), rp).matrix() == herm_apply(herm_apply(h1, u, rp), v, rp).matrix());
}

TEST_CASE("residue rank") {
    RingParams rp = make_params(3, 1);
    CHECK(residue_rank(QuatMatrix::identity(3), rp) == 3);
    QuatMatrix pi2(2, 2);
    pi2(0, 0) = kPi;
    pi2(1, 1) = kPi;
    CHECK(residue_rank(pi2, rp) == 0);
    QuatMatrix col(2, 1);
    col(0, 0) = kOne;
    col(1, 0) = kPi;
    CHECK(residue_rank(col, rp) == 1);
    QuatMatrix dep(2, 2);
    dep(0, 0) = {1, 1, 0, 0};
    dep(0, 1) = {2, 2, 0, 0};
    dep(1, 0) = kEps;
    dep(1, 1) = {0, 2, 0, 0};
    CHECK(residue_rank(dep, rp) == 1);
}

TEST_CASE("reduced norm of matrices") {
    RingParams rp = make_params(3, 3);
    CHECK(matrix_nrd(QuatMatrix::identity(3), rp) == 1);
    QuatMatrix d(2, 2);
    d(0, 0) = {3, 0, 0, 0};
    d(1, 1) = {9, 0, 0, 0};
    CHECK(matrix_nrd(d, rp) == 27 * 27 % rp.modulus);  // Nrd(p) = p^2 per entry

    QuatMatrix h(2, 2);
    h(0, 1) = kPi;
    h(1, 0) = quat_neg(kPi, rp);
    CHECK(matrix_nrd(h, rp) == 9);

    std::mt19937 gen(5);
    RingParams rp2 = make_params(3, 2);
    std::uniform_int_distribution<i64> dist(0, rp2.modulus - 1);
    for (int t = 0; t < 20; ++t) {
        QuatMatrix a(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a(i, j) = {dist(gen), dist(gen), dist(gen), dist(gen)};
        auto phi = phi_embed(a, rp2);
        CHECK(det_berkowitz(phi, rp2) == det_permutation(phi, rp2));
        QuatMatrix b2(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) b2(i, j) = a(i, j);
        CHECK(matrix_nrd(mat_mul(b2, b2, rp2), rp2) == matrix_nrd(b2, rp2) * matrix_nrd(b2, rp2) % rp2.modulus);
    }
}

TEST_CASE("congruence test") {
    RingParams rp = make_params(3, 2);
    CHECK(in_congruence(QuatMatrix(2, 2), rp));
    QuatMatrix c(1, 1);
    c(0, 0) = {9, 0, 0, 0};
    CHECK(in_congruence(c, rp));
    c(0, 0) = {3, 0, 0, 0};
    CHECK_FALSE(in_congruence(c, rp));
    QuatMatrix o(2, 2);
    o(0, 1) = {0, 0, 3, 0};  // valuation 3 = 2l - 1
    o(1, 0) = quat_conj(o(0, 1), rp);
    CHECK(in_congruence(o, rp));
    o(0, 1) = {3, 0, 0, 0};  // valuation 2
    o(1, 0) = o(0, 1);
    CHECK_FALSE(in_congruence(o, rp));
}
