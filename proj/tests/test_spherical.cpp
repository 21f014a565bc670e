#include <doctest.h>

#include "qherm/spherical.hpp"

using namespace qherm;

namespace {
RatFuncQ qp(int k) { return RatFuncQ::q_pow(k); }
ExactRational ratio(const BigInt& a, const BigInt& b) {
    ExactRational r(a, b);
    r.canonicalize();
    return r;
}
Poly x(int n, int i) { return Poly::variable(n, i); }

std::vector<Partition> pairs_in_box(int lo, int hi) {
    std::vector<Partition> out;
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= a; ++b)
            if (Partition::valid({a, b})) out.emplace_back(std::vector<int>{a, b});
    return out;
}
}  // namespace

TEST_CASE("ingredients") {
    CHECK(lambda_alpha(Partition({2, 0})) == std::vector<int>{1, 0});
    CHECK(lambda_alpha(Partition({3, 3, 2})) == std::vector<int>{2, 2, 1});
    CHECK(lambda_alpha(Partition({-1, -1})) == std::vector<int>{0, 0});
    CHECK(lambda_alpha(Partition({-3, -3})) == std::vector<int>{-1, -1});

    CHECK(odd_data(Partition({2, 0})).i_odd.empty());
    CHECK(odd_data(Partition({2, 0})).c_odd == RatFuncQ(1));
    CHECK(odd_data(Partition({1, 1})).c_odd == (RatFuncQ(1) - qp(-1)) * qp(1));
    auto od = odd_data(Partition({3, 3, 0}));
    CHECK(od.i_odd == std::vector<int>{1});
    CHECK(od.c_odd == (RatFuncQ(1) - qp(-1)) * qp(2));

    CHECK(z_zero(2) == std::vector<int>{-1, 1});
    CHECK(z_zero(3) == std::vector<int>{-2, 0, 2});
    CHECK(gn_factor(2) == x(2, 1) - x(2, 0) * qp(1));
}

TEST_CASE("explicit formula, small cases") {
    CHECK(psi_explicit(Partition({0})) == Poly::constant(1, RatFuncQ(1)));
    CHECK(psi_explicit(Partition({-1, -1})) == Poly::constant(2, qp(1) - RatFuncQ(1)));
    // carries the 1/(1+q^{-2}) of the prefactor
    CHECK(psi_explicit(Partition({0, 0})) ==
          (x(2, 0) + x(2, 1)) * ((RatFuncQ(1) - qp(-1)) / (RatFuncQ(1) + qp(-2))));
    CHECK(main_term_Q(Partition({-1, -1})) == Poly::constant(2, RatFuncQ(1) + qp(-2)));
    CHECK(main_term_Q(Partition({4})) == x(1, 0) * x(1, 0));
}

TEST_CASE("size-2 closed form against the general formula") {
    for (const auto& a : pairs_in_box(-4, 4)) {
        CAPTURE(a.to_string());
        CHECK(size2_closed(a) == psi_explicit(a));
    }
}

TEST_CASE("symmetry and translation") {
    std::vector<Partition> list = {Partition({0, 0, 0}), Partition({2, 0, 0}), Partition({1, 1, 0}),
                                   Partition({2, 1, 1}), Partition({0, -1, -1})};
    for (const auto& a : list) {
        CAPTURE(a.to_string());
        Poly p = psi_explicit(a);
        CHECK(is_symmetric(p));
        CHECK(psi_explicit(a.shifted(2)) == p.shifted({1, 1, 1}));
        CHECK(from_elementary(to_elementary(p)) == p);
    }
}

TEST_CASE("Hall-Littlewood variants") {
    CHECK(hl_variant(HLKind::GL, {0, 0}) == Poly::constant(2, RatFuncQ(1) + qp(-1)));
    CHECK(hl_variant(HLKind::A, {0, 0}) == Poly::constant(2, RatFuncQ(1) + qp(-2)));
    CHECK(hl_variant(HLKind::H, {0, 0}) == Poly::constant(2, RatFuncQ(1) - qp(-1)));
    CHECK(is_symmetric(hl_variant(HLKind::GL, {2, 1, 0})));
}

TEST_CASE("delta closed form") {
    auto d = delta_closed(Partition({2, 0}));
    CHECK(d.coeff == qp(-1));
    CHECK(d.mono == Exponent{0, 1});
    CHECK(d.den.empty());
    auto o = delta_closed(Partition({1, 1}));
    CHECK(o.coeff == (RatFuncQ(1) - qp(-1)) * qp(1));
    CHECK(o.mono == Exponent{1, 1});
    REQUIRE(o.den.size() == 1);
    CHECK(o.den[0].poly(2) == x(2, 1) - x(2, 0) * qp(1));
    CHECK(delta_closed(Partition({0, 0, 0})).coeff == RatFuncQ(1));

    auto t = delta_t_expansion(Partition({1, 1}), 3);
    CHECK(t.size() == 3);
    CHECK(t.at({1, 1}) == RatFuncQ(1) - qp(-1));
    CHECK(t.at({3, 1}) == (RatFuncQ(1) - qp(-1)) * qp(-2));
}

TEST_CASE("delta oracle at level 2") {
    auto even = delta_oracle(Partition({2, 0}), 3, 2);
    CHECK(even.overflow == 0);
    REQUIRE(even.counts.size() == 1);
    CHECK(even.counts.begin()->first == std::pair<int, int>{0, 1});

    auto odd = delta_oracle(Partition({1, 1}), 3, 2);
    CHECK(ratio(odd.counts.at({1, 1}), odd.total) == ExactRational(2, 3));
    CHECK(ratio(odd.overflow, odd.total) == ExactRational(1, 3));
}

TEST_CASE("change of variables") {
    std::vector<ExactRational> s = {0, 0};
    auto z = s_to_z(s);
    CHECK(z == std::vector<ExactRational>{-1, 1});
    CHECK(z_to_s(z) == s);
    CHECK(s_to_z({0, 0, 0}) == std::vector<ExactRational>{-2, 0, 2});
    std::vector<ExactRational> w = {ExactRational(1, 2), 3, -2};
    CHECK(z_to_s(s_to_z(w)) == w);
}

TEST_CASE("reduction identity") {
    SymTemplate t = c_n_template(3);
    Exponent lam{3, 0, 0};
    CHECK(reduction_combination(t, lam, 0) == symmetric_sum(t, lam));
    SymTemplate t2 = c_n_template(2);
    Exponent mu{1, 2};
    CHECK(reduction_combination(t2, mu, 1) == symmetric_sum(t2, mu));
}

TEST_CASE("induction at order 0") {
    auto rep = verify_induction(Partition({2, 0}), 0, 3, 2);
    CHECK(rep.agree);
    CHECK(rep.lhs == std::vector<ExactRational>{ExactRational(9, 10)});
}
