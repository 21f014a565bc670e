#include <doctest.h>

#include "qherm/sympoly.hpp"

using namespace qherm;

namespace {
RatFuncQ qp(int k) { return RatFuncQ::q_pow(k); }
Poly x(int n, int i) { return Poly::variable(n, i); }

GPoly gp(int n, std::initializer_list<std::pair<Exponent, long>> terms) {
    GPoly g(n);
    for (const auto& [e, c] : terms) g.add_term(e, ExactRational(c));
    return g;
}
}  // namespace

TEST_CASE("orbit sums") {
    SymTemplate one(2);
    CHECK(symmetric_sum(one, {1, 0}) == x(2, 0) + x(2, 1));

    SymTemplate t(2);
    t.num = {{0, 1, qp(-2)}};
    t.den = vandermonde(2);
    CHECK(symmetric_sum(t, {0, 0}) == Poly::constant(2, RatFuncQ(1) + qp(-2)));

    SymTemplate c(2);
    c.num = {{0, 1, qp(1)}, {0, 1, qp(-2)}};
    c.den = vandermonde(2);
    Poly s = symmetric_sum(c, {0, 0});
    CHECK(s == (x(2, 0) + x(2, 1)) * (RatFuncQ(1) - qp(-1)));
    CHECK(is_symmetric(s));

    // a denominator that is not the Vandermonde goes through the general lcm
    SymTemplate bad(2);
    bad.den = {{0, 1, qp(1)}};
    CHECK_THROWS_AS(symmetric_sum(bad, {0, 0}), std::domain_error);
}

TEST_CASE("symmetry test") {
    CHECK(is_symmetric(x(2, 0) + x(2, 1)));
    CHECK_FALSE(is_symmetric(x(2, 0)));
    CHECK(is_symmetric(x(3, 0) * x(3, 1) * x(3, 2)));
}

TEST_CASE("elementary coordinates") {
    Poly p = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
    auto e = to_elementary(p);
    Poly expect = Poly::monomial({2, 0}, RatFuncQ(1)) - Poly::monomial({0, 1}, RatFuncQ(2));
    CHECK(e.poly == expect);
    CHECK(from_elementary(e) == p);

    CHECK(to_elementary(x(2, 0) * x(2, 1)).poly == Poly::monomial({0, 1}, RatFuncQ(1)));
    Poly lin = (x(2, 0) + x(2, 1)) * (RatFuncQ(1) - qp(-1));
    CHECK(to_elementary(lin).poly == Poly::monomial({1, 0}, RatFuncQ(1) - qp(-1)));

    // negative exponents are carried by s_n^{-k}
    Poly inv = Poly::monomial({-1, 0, 0}, RatFuncQ(1)) + Poly::monomial({0, -1, 0}, RatFuncQ(1)) +
               Poly::monomial({0, 0, -1}, RatFuncQ(1));
    auto ei = to_elementary(inv);
    CHECK(ei.sn_inv == 1);
    CHECK(ei.poly == Poly::monomial({0, 1, 0}, RatFuncQ(1)));
    CHECK(from_elementary(ei) == inv);

    CHECK_THROWS(to_elementary(x(2, 0)));
}

TEST_CASE("Groebner bases") {
    auto b = buchberger({gp(2, {{{1, 0}, 1}}), gp(2, {{{0, 1}, 1}})});
    CHECK(b.basis.size() == 2);
    CHECK_FALSE(ideal_member(gp(2, {{{0, 0}, 1}}), b));
    CHECK(ideal_member(gp(2, {{{2, 0}, 3}, {{0, 1}, -1}}), b));

    auto unit = buchberger({gp(2, {{{0, 0}, 5}})});
    REQUIRE(unit.basis.size() == 1);
    CHECK(unit.basis[0] == gp(2, {{{0, 0}, 1}}));

    // the two degree-3 generators for n = 3 at q = 3
    ExactRational q0(3);
    ExactRational c = q0 * q0 * pow(ExactRational(1) / 9 + ExactRational(1) / 3 + 1, 2);
    GPoly g1 = gp(3, {{{1, 1, 0}, 1}});
    g1.add_term({0, 0, 1}, -c);
    GPoly g2 = gp(3, {{{2, 0, 0}, 1}});
    g2.add_term({0, 1, 0}, -c);
    for (auto ord : {MonomialOrder::Grevlex, MonomialOrder::Lex}) {
        auto ideal = buchberger({g1, g2}, ord);
        CHECK(ideal_member(g1, ideal));
        CHECK(ideal_member(g2, ideal));
        CHECK(ideal_member(g1 * gp(3, {{{1, 0, 0}, 1}}) - g2 * gp(3, {{{0, 0, 2}, 7}}), ideal));
        CHECK_FALSE(ideal_member(gp(3, {{{1, 0, 0}, 1}}), ideal));
        // normal forms are idempotent
        GPoly f = gp(3, {{{3, 1, 0}, 1}, {{0, 0, 2}, 2}});
        GPoly nf = normal_form(f, ideal.basis, ord);
        CHECK(normal_form(nf, ideal.basis, ord) == nf);
    }
}
