#include "qherm/plancherel.hpp"

#include <map>
#include <stdexcept>

namespace qherm {

namespace {

RatFuncQ qp(int k) { return RatFuncQ::q_pow(k); }

UPoly uconst(const ExactRational& c) { return UPoly::constant(2, c); }

RatFuncQ upoly_at_q(const UPoly& p) {
    RatFuncQ acc(0);
    for (const auto& [e, c] : p.terms()) acc += RatFuncQ(c) * qp(e[0] - 2 * e[1]);
    return acc;
}

}  // namespace

BiFrac::BiFrac(const ExactRational& c) : num_(uconst(c)), den_(uconst(1)) { fold(); }

BiFrac::BiFrac(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("BiFrac with zero denominator");
    fold();
}

BiFrac BiFrac::u1() { return BiFrac(UPoly::variable(2, 0), uconst(1)); }
BiFrac BiFrac::u2() { return BiFrac(UPoly::variable(2, 1), uconst(1)); }

void BiFrac::fold() {
    if (num_.is_zero()) {
        den_ = uconst(1);
        return;
    }
    if (den_.size() == 1) {
        const auto& [e, c] = *den_.terms().begin();
        Exponent inv{-e[0], -e[1]};
        num_ *= UPoly::monomial(inv, ExactRational(1) / c);
        den_ = uconst(1);
    }
}

BiFrac BiFrac::operator-() const { return BiFrac(-num_, den_); }

BiFrac& BiFrac::operator+=(const BiFrac& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (auto k = o.den_.exact_div(den_)) {
        num_ = num_ * *k + o.num_;
        den_ = o.den_;
    } else if (auto k2 = den_.exact_div(o.den_)) {
        num_ += o.num_ * *k2;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    fold();
    return *this;
}

BiFrac& BiFrac::operator-=(const BiFrac& o) { return *this += -o; }

BiFrac& BiFrac::operator*=(const BiFrac& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    fold();
    return *this;
}

BiFrac& BiFrac::operator/=(const BiFrac& o) {
    if (o.is_zero()) throw std::domain_error("BiFrac division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    fold();
    return *this;
}

bool BiFrac::operator==(const BiFrac& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFuncQ BiFrac::at_q() const { return upoly_at_q(num_) / upoly_at_q(den_); }

ExactRational BiFrac::eval(const ExactRational& u1, const ExactRational& u2) const {
    ExactRational d = den_.evaluate({u1, u2});
    if (d == 0) throw std::domain_error("BiFrac pole at the given point");
    return num_.evaluate({u1, u2}) / d;
}

BiFrac BiFrac::simplified() const {
    UPoly num = num_, den = den_;
    const UPoly one = uconst(1), u1 = UPoly::variable(2, 0), u2 = UPoly::variable(2, 1);
    // every denominator produced by the residue sums is built from these
    for (const UPoly& f : {one + u1, one + u2, one - u1 * u2, u1 - u2, one - u1, one - u2, u1 + u2}) {
        while (true) {
            auto a = num.exact_div(f), b = den.exact_div(f);
            if (!a || !b) break;
            num = *a;
            den = *b;
        }
    }
    if (auto q = num.exact_div(den)) return BiFrac(*q, one);
    ExactRational lead = den.terms().rbegin()->second;
    return BiFrac(num * UPoly::constant(2, 1 / lead), den * UPoly::constant(2, 1 / lead));
}

std::string BiFrac::to_string() const {
    auto cs = [](const ExactRational& c) { return qherm::to_string(c); };
    BiFrac s = simplified();
    if (s.den_ == uconst(1)) return s.num_.to_string(cs, "u");
    return "(" + s.num_.to_string(cs, "u") + ")/(" + s.den_.to_string(cs, "u") + ")";
}

XYPoly TransformValue::poly() const {
    XYPoly y = h == 0 ? XYPoly::constant(1, RatFuncQ(1)) : h_poly(h, qp(1), qp(-2));
    XYPoly out(2);
    for (const auto& [e, c] : y.terms()) out.add_term({xexp, e[0]}, c * scalar);
    return out;
}

TransformValue f_hat_size2(const Partition& alpha) {
    if (alpha.size() != 2) throw std::invalid_argument("size-2 transform needs a pair");
    const RatFuncQ one(1), den = one + qp(-2);
    if (alpha[0] % 2 != 0) {
        int e = (alpha[0] + 1) / 2;
        return {(one - qp(-2)) / den, 2 * e, 0};
    }
    int l1 = alpha[0] / 2, l2 = alpha[1] / 2;
    RatFuncQ s = l1 == l2 ? one / den : qp(l1 - l2) * (one - qp(-1)) / den;
    return {s, l1 + l2 + 1, l1 - l2 + 1};
}

XYPoly to_xy(const LaurentPoly<RatFuncQ>& psi) {
    if (psi.arity() != 2) throw std::invalid_argument("to_xy needs two variables");
    return psi.substitute({RatFuncQ(1), RatFuncQ(1)}, {{1, -1}, {1, 1}}, 2);
}

RatFuncQ orbit_volume(const Partition& alpha) {
    if (alpha.size() != 2) throw std::invalid_argument("orbit volume is implemented for pairs");
    int total = alpha[0] + alpha[1];
    return qp(3 * total / 2) / density_self_closed(alpha) * density_self_closed(Partition({0, 0}));
}

RatFuncQ plancherel_normalization() {
    RatFuncQ one(1);
    return (one + qp(-2)).pow(2) / (one - qp(-1));
}

RatFuncQ xy_inner(const XYPoly& f, const XYPoly& g, const ContourRule& rule) {
    auto slices = [](const XYPoly& p) {
        std::map<int, YPoly<RatFuncQ>> s;
        for (const auto& [e, c] : p.terms()) s.try_emplace(e[0], 1).first->second.add_term({e[1]}, c);
        return s;
    };
    auto fs = slices(f), gs = slices(g);
    RatFuncQ acc(0);
    for (const auto& [k, fy] : fs) {
        auto it = gs.find(k);
        if (it != gs.end()) acc += contour_inner(fy, it->second, qp(1), qp(-2), rule);
    }
    return acc;
}

PlancherelResult plancherel_check(const Partition& alpha, const Partition& beta) {
    PlancherelResult r;
    r.lhs = plancherel_normalization() * xy_inner(f_hat_size2(alpha).poly(), f_hat_size2(beta).poly());
    r.rhs = alpha == beta ? orbit_volume(alpha) : RatFuncQ(0);
    r.holds = r.lhs == r.rhs;
    return r;
}

RatFuncQ inversion_value(const Partition& alpha, const Partition& x) {
    // the indicator of K pi^a is the check-indicator of (-a_2, -a_1)
    auto inv = [](const Partition& a) { return Partition({-a[1], -a[0]}); };
    RatFuncQ ip = xy_inner(f_hat_size2(inv(alpha)).poly(), f_hat_size2(inv(x)).poly());
    return plancherel_normalization() * ip / orbit_volume(x);
}

}  // namespace qherm
