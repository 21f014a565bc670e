#include <doctest.h>

#include <algorithm>

#include "qherm/plancherel.hpp"
#include "qherm/spherical.hpp"

using namespace qherm;

namespace {
RatFuncQ qp(int k) { return RatFuncQ::q_pow(k); }
const BiFrac U1 = BiFrac::u1(), U2 = BiFrac::u2();
}  // namespace

TEST_CASE("H_1 and the weight") {
    auto h1 = h_poly(1, U1, U2);
    auto expect = YPoly<BiFrac>::monomial({1}, BiFrac(1) - U1 * U2) + YPoly<BiFrac>::monomial({-1}, BiFrac(1) - U1 * U2);
    CHECK(h1 == expect);
    // symmetric under Y -> 1/Y
    for (int l = 1; l <= 5; ++l) {
        auto h = h_poly(l, U1, U2);
        for (const auto& [e, c] : h.terms()) CHECK(h.coeff({-e[0]}) == c);
    }
    ExactRational u1(1, 3), u2(1, 5), w(2);
    ExactRational direct = (1 - w) * (1 - 1 / w) / ((1 - u1 * w) * (1 - u2 * w) * (1 - u1 / w) * (1 - u2 / w));
    CHECK(weight_w(w, u1, u2) == direct);
    CHECK_THROWS(h_poly(0, U1, U2));
}

TEST_CASE("orthogonality with symbolic u") {
    BiFrac one(1);
    auto c1 = YPoly<BiFrac>::constant(1, one);
    CHECK(contour_inner(c1, c1, U1, U2) == one / ((one + U1) * (one + U2) * (one - U1 * U2)));
    for (int l = 1; l <= 4; ++l) {
        CAPTURE(l);
        CHECK(contour_inner(h_poly(l, U1, U2), c1, U1, U2).is_zero());
        for (int m = 1; m <= 4; ++m) {
            CAPTURE(m);
            BiFrac expect = l != m ? BiFrac(0) : l == 1 ? one - U1 * U2 : one;
            CHECK(contour_inner(h_poly(l, U1, U2), h_poly(m, U1, U2), U1, U2) == expect);
        }
    }
}

TEST_CASE("pole order does not matter") {
    auto f = h_poly(2, U1, U2) * h_poly(4, U1, U2);
    ContourRule r1, r2;
    r2.inside = {Pole::U2, Pole::Zero, Pole::U1};
    CHECK(contour_residues(f, U1, U2, r1) == contour_residues(f, U1, U2, r2));
    // specialization commutes with the residue sum
    ExactRational a(1, 2), b(1, 7);
    auto fr = f.map_coeffs([&](const BiFrac& c) { return c.eval(a, b); });
    CHECK(contour_residues(f, U1, U2).eval(a, b) == contour_residues(fr, a, b));
}

TEST_CASE("transform agrees with volume times Psi") {
    for (int a = -3; a <= 4; ++a)
        for (int b = -3; b <= a; ++b) {
            if (!Partition::valid({a, b})) continue;
            Partition al({a, b});
            CAPTURE(al.to_string());
            XYPoly expect = to_xy(psi_explicit(al)) * orbit_volume(al);
            CHECK(f_hat_size2(al).poly() == expect);
        }
}

TEST_CASE("orbit volumes") {
    RatFuncQ one(1);
    CHECK(orbit_volume(Partition({0, 0})) == one);
    CHECK(orbit_volume(Partition({2, 2})) == one);
    CHECK(orbit_volume(Partition({2, 0})) == qp(2) * (one - qp(-1)));
    CHECK(orbit_volume(Partition({4, 0})) == qp(4) * (one - qp(-1)));
    CHECK(orbit_volume(Partition({1, 1})) == qp(-1) * (one + qp(-1)) / (one + qp(-2)));
    CHECK(orbit_volume(Partition({-1, -1})) == orbit_volume(Partition({1, 1})));
}

TEST_CASE("Plancherel and inversion for size 2") {
    std::vector<Partition> list = {Partition({0, 0}), Partition({2, 0}), Partition({2, 2}), Partition({1, 1}),
                                   Partition({3, 3})};
    for (const auto& a : list)
        for (const auto& b : list) {
            CAPTURE(a.to_string());
            CAPTURE(b.to_string());
            auto r = plancherel_check(a, b);
            CHECK(r.holds);
            CHECK(inversion_value(a, b) == RatFuncQ(a == b ? 1 : 0));
        }
    RatFuncQ one(1), d = one + qp(-2);
    auto norm = [](const Partition& a) {
        auto f = f_hat_size2(a).poly();
        return xy_inner(f, f);
    };
    CHECK(norm(Partition({2, 2})) == (one - qp(-1)) / d.pow(2));
    CHECK(norm(Partition({2, 0})) == qp(2) * (one - qp(-1)).pow(2) / d.pow(2));
    CHECK(norm(Partition({1, 1})) == qp(-1) * (one - qp(-2)) / d.pow(3));
}
