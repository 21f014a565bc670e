#include <doctest.h>

#include "qherm/density.hpp"

using namespace qherm;

namespace {
RatFuncQ qp(int k) { return RatFuncQ::q_pow(k); }
}

TEST_CASE("partitions") {
    CHECK(Partition::valid({2, 0}));
    CHECK(Partition::valid({3, 3, 2}));
    CHECK_FALSE(Partition::valid({3, 2}));
    CHECK_FALSE(Partition::valid({0, 2}));
    CHECK(Partition::parse("-1,-1").parts() == std::vector<int>{-1, -1});
    CHECK_THROWS(Partition::parse("1,0"));
}

TEST_CASE("Gram representatives") {
    RingParams rp = make_params(3, 2);
    CHECK(build_gram(Partition({0, 0}), rp).matrix() == QuatMatrix::identity(2));
    auto h = build_gram(Partition({1, 1}), rp);
    CHECK(h(0, 1) == QuatElem{0, 0, 1, 0});
    CHECK(h(1, 0) == QuatElem{0, 0, 8, 0});
    auto d = build_gram(Partition({2, 0}), rp);
    CHECK(d(0, 0) == QuatElem{3, 0, 0, 0});
    CHECK(d(1, 1) == QuatElem{1, 0, 0, 0});
    CHECK_THROWS(build_gram(Partition({-2}), rp));
}

TEST_CASE("small counts") {
    RingParams r1 = make_params(3, 1), r2 = make_params(3, 2);
    auto one1 = build_gram(Partition({0}), r1);
    CHECK(count_reps(one1, one1, r1, false) == 36);
    auto one2 = build_gram(Partition({0}), r2);
    CHECK(count_reps(one2, one2, r2, false) == 972);
    CHECK(count_reps(zero_form(1, r1), build_gram(Partition({1, 1}), r1), r1, true) == 6480);
}

TEST_CASE("convolution path agrees with enumeration") {
    RingParams r1 = make_params(3, 1), r2 = make_params(3, 2);
    auto one = build_gram(Partition({0}), r1);
    auto id2 = build_gram(Partition({0, 0}), r1);
    for (bool pr : {false, true}) CHECK(count_reps_convolved(one, id2, r1, pr) == count_reps(one, id2, r1, pr));
    auto one2 = build_gram(Partition({0}), r2);
    CHECK(count_reps_convolved(one2, one2, r2, false) == 972);
    auto p2 = build_gram(Partition({2}), r2);
    auto d = build_gram(Partition({2, 0}), r2);
    CHECK(count_reps_convolved(p2, d, r2, true) == count_reps(p2, d, r2, true));

    RingParams r3 = make_params(3, 3);
    auto b = build_gram(Partition({4}), r3);
    auto a = build_gram(Partition({0, 0}), r3);
    CHECK_THROWS_AS(count_reps(b, a, r3, false), BudgetExceeded);
    CHECK(count_reps_convolved(b, a, r3, false) > 0);
}

TEST_CASE("thread split does not change counts") {
    RingParams r1 = make_params(3, 1);
    auto h = build_gram(Partition({1, 1}), r1);
    CountOptions one, four;
    four.threads = 4;
    CHECK(count_reps(h, h, r1, false, one) == count_reps(h, h, r1, false, four));
}

TEST_CASE("density limits") {
    auto unit = density_limit(gram_builder(Partition({0})), gram_builder(Partition({0})), 3, {1, 2}, false);
    CHECK(unit.stable());
    CHECK(unit.value() == ExactRational(4, 3));
    auto pr = density_limit(gram_builder(Partition({0})), gram_builder(Partition({0, 0})), 3, {1, 2}, true,
                            CountMethod::Convolve);
    CHECK(pr.value() == ExactRational(8, 9));
    auto pp = density_limit(gram_builder(Partition({2})), gram_builder(Partition({2})), 3, {2}, false);
    CHECK(pp.levels[0].count == 2916);
    CHECK(pp.value() == ExactRational(4));
}

TEST_CASE("closed formulas") {
    CHECK(density_self_closed(Partition({0, 0, 0})) == w_factor(3, -qp(-1)));
    CHECK(density_self_closed(Partition({2, 0})) == qp(1) * (RatFuncQ(1) + qp(-1)).pow(2));
    CHECK(density_self_closed(Partition({6, 2})) == qp(3 + 5) * (RatFuncQ(1) + qp(-1)).pow(2));
    CHECK(density_zero_ht(1) == qp(1) * (RatFuncQ(1) - qp(-4)));
    CHECK(density_ht_closed(2) == qp(16) * (RatFuncQ(1) - qp(-4)) * (RatFuncQ(1) - qp(-8)));
    CHECK(density_unit_closed(2) == (RatFuncQ(1) + qp(-1)) * (RatFuncQ(1) - qp(-2)));
    CHECK(density_self_closed(Partition({1, 1})).eval(3) == 80);
    CHECK(apply_shift(density_self_closed(Partition({2, 0})), 1, 2) ==
          density_self_closed(Partition({4, 2})));
    CHECK(apply_shift(RatFuncQ(5), 0, 3) == RatFuncQ(5));
}

TEST_CASE("key lemma witness") {
    CHECK(key_beta(Partition({2, 0})) == Partition({0}));
    CHECK(key_beta(Partition({1, 1})) == Partition({2}));
    CHECK(key_beta(Partition({3, 3, 2})) == Partition({4, 2}));
}

TEST_CASE("decomposition rule") {
    Partition a({2, 0});
    CHECK(decomposition_applies(a, 1));
    CHECK(decomposition_rhs(a, 1) == density_self_closed(a));
    Partition b({4, 4, 1, 1});
    CHECK(decomposition_rhs(b, 2) == density_self_closed(b));
}
