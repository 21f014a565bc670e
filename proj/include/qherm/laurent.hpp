#pragma once

// Multivariate Laurent polynomials x^e with e in Z^n, generic over an exact
// coefficient field C (ExactRational, RatFuncQ, ...). Terms are kept in a
// lexicographically ordered map, so the last entry is the lex-leading term.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qherm/exact.hpp"

namespace qherm {

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
    return is_zero(c);
}
}  // namespace detail

using Exponent = std::vector<int>;

template <class C>
class LaurentPoly {
public:
    using Terms = std::map<Exponent, C>;

    LaurentPoly() = default;
    explicit LaurentPoly(int arity) : arity_(arity) {}

    static LaurentPoly constant(int arity, const C& c) { return monomial(Exponent(static_cast<size_t>(arity), 0), c); }
    static LaurentPoly monomial(const Exponent& e, const C& c) {
        LaurentPoly r(static_cast<int>(e.size()));
        if (!qherm_is_zero(c)) r.terms_.emplace(e, c);
        return r;
    }
    static LaurentPoly variable(int arity, int i, int power = 1) {
        Exponent e(static_cast<size_t>(arity), 0);
        e[static_cast<size_t>(i)] = power;
        return monomial(e, C(1));
    }

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    C coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Exponent& e, const C& c) {
        if (qherm_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (qherm_is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        adopt_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        adopt_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly& operator*=(const C& s) {
        if (qherm_is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const C& s) { return a *= s; }
    friend LaurentPoly operator*(const C& s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(std::max(a.arity_, b.arity_));
        Exponent e(static_cast<size_t>(r.arity_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Multiply by the monomial x^e.
    LaurentPoly shifted(const Exponent& e) const {
        LaurentPoly r(arity_);
        for (const auto& [f, c] : terms_) {
            Exponent g = f;
            for (size_t i = 0; i < g.size(); ++i) g[i] += e[i];
            r.terms_.emplace_hint(r.terms_.end(), std::move(g), c);
        }
        return r;
    }

    /// Image under x_i -> x_{sigma[i]}.
    LaurentPoly permuted(const std::vector<int>& sigma) const {
        LaurentPoly r(arity_);
        Exponent g(static_cast<size_t>(arity_));
        for (const auto& [e, c] : terms_) {
            for (size_t i = 0; i < e.size(); ++i) g[static_cast<size_t>(sigma[i])] = e[i];
            r.terms_.emplace(g, c);
        }
        return r;
    }

    /// Fixed by every adjacent transposition.
    bool is_symmetric() const {
        std::vector<int> sigma(static_cast<size_t>(arity_));
        for (int k = 0; k + 1 < arity_; ++k) {
            for (int i = 0; i < arity_; ++i) sigma[static_cast<size_t>(i)] = i;
            std::swap(sigma[static_cast<size_t>(k)], sigma[static_cast<size_t>(k + 1)]);
            if (!(permuted(sigma) == *this)) return false;
        }
        return true;
    }

    /// Componentwise minimum / maximum exponent over all terms.
    Exponent min_exponent() const { return extreme(true); }
    Exponent max_exponent() const { return extreme(false); }

    /// Exact quotient by g, or nullopt when g does not divide *this.
    /// The quotient's exponents are confined to the box allowed by the
    /// per-variable degree ranges, which bounds the search.
    std::optional<LaurentPoly> exact_div(const LaurentPoly& g) const {
        if (g.is_zero()) throw std::domain_error("Laurent division by zero");
        LaurentPoly quot(std::max(arity_, g.arity_));
        if (is_zero()) return quot;
        Exponent lo = min_exponent(), hi = max_exponent();
        Exponent glo = g.min_exponent(), ghi = g.max_exponent();
        for (size_t i = 0; i < lo.size(); ++i) {
            lo[i] -= glo[i];
            hi[i] -= ghi[i];
            if (lo[i] > hi[i]) return std::nullopt;
        }
        const auto& [glead, gc] = *g.terms_.rbegin();
        C ginv = C(1) / gc;
        LaurentPoly rem = *this;
        Exponent e(lo.size());
        while (!rem.is_zero()) {
            const auto& [rlead, rc] = *rem.terms_.rbegin();
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = rlead[i] - glead[i];
                if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
            }
            C c = rc * ginv;
            quot.terms_.emplace(e, c);
            Exponent f(e.size());
            for (const auto& [ge, gcoef] : g.terms_) {
                for (size_t i = 0; i < f.size(); ++i) f[i] = e[i] + ge[i];
                rem.add_term(f, -(c * gcoef));
            }
        }
        return quot;
    }

    template <class F>
    auto map_coeffs(F f) const -> LaurentPoly<decltype(f(std::declval<C>()))> {
        using D = decltype(f(std::declval<C>()));
        LaurentPoly<D> r(arity_);
        for (const auto& [e, c] : terms_) r.add_term(e, f(c));
        return r;
    }

    /// Substitute x_i -> scale[i] * y^{image[i]} into a Laurent polynomial in
    /// new_arity variables.
    LaurentPoly substitute(const std::vector<C>& scale, const std::vector<Exponent>& image, int new_arity) const {
        LaurentPoly r(new_arity);
        Exponent g(static_cast<size_t>(new_arity));
        for (const auto& [e, c] : terms_) {
            std::fill(g.begin(), g.end(), 0);
            C coef = c;
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                coef *= int_pow(scale[i], e[i]);
                for (size_t k = 0; k < g.size(); ++k) g[k] += e[i] * image[i][k];
            }
            r.add_term(g, coef);
        }
        return r;
    }

    /// Evaluate at x_i = values[i].
    C evaluate(const std::vector<C>& values) const {
        C acc(0);
        for (const auto& [e, c] : terms_) {
            C t = c;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) t *= int_pow(values[i], e[i]);
            acc += t;
        }
        return acc;
    }

    template <class ToStr>
    std::string to_string(ToStr coeff_str, const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(it->second) << ")";
            for (size_t i = 0; i < it->first.size(); ++i) {
                int k = it->first[i];
                if (k == 0) continue;
                os << "*" << var << (i + 1);
                if (k != 1) os << "^" << k;
            }
        }
        return os.str();
    }

    static C int_pow(const C& base, int e) {
        if (e < 0) return C(1) / int_pow(base, -e);
        C r(1), b = base;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

private:
    static bool qherm_is_zero(const C& c) { return detail::coeff_is_zero(c); }

    void adopt_arity(const LaurentPoly& o) {
        if (arity_ == 0) arity_ = o.arity_;
    }

    Exponent extreme(bool lower) const {
        Exponent r(static_cast<size_t>(arity_), 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                r = e;
                first = false;
                continue;
            }
            for (size_t i = 0; i < r.size(); ++i) r[i] = lower ? std::min(r[i], e[i]) : std::max(r[i], e[i]);
        }
        return r;
    }

    int arity_ = 0;
    Terms terms_;
};

}  // namespace qherm
