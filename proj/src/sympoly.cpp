#include "qherm/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qherm {

Poly Binomial::poly(int arity) const {
    return Poly::variable(arity, i) - Poly::variable(arity, j) * c;
}

void SymTemplate::cancel_common() {
    for (size_t k = 0; k < den.size();) {
        auto it = std::find(num.begin(), num.end(), den[k]);
        if (it == num.end()) {
            ++k;
            continue;
        }
        num.erase(it);
        den.erase(den.begin() + static_cast<long>(k));
    }
}

std::vector<Binomial> vandermonde(int n) {
    std::vector<Binomial> v;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v.push_back({i, j, RatFuncQ(1)});
    return v;
}

std::vector<std::vector<int>> permutations(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> s(static_cast<size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

namespace {

// sigma applied to x_i - c x_j, rewritten as scalar * (x_a - c' x_b) with a < b.
std::pair<Binomial, RatFuncQ> permute_binomial(const Binomial& b, const std::vector<int>& sigma) {
    int a = sigma[static_cast<size_t>(b.i)], c = sigma[static_cast<size_t>(b.j)];
    if (a < c) return {{a, c, b.c}, RatFuncQ(1)};
    return {{c, a, b.c.inverse()}, -b.c};
}

struct Multiset {
    std::vector<std::pair<Binomial, int>> items;

    void add(const Binomial& b, int k = 1) {
        for (auto& [x, m] : items)
            if (x == b) {
                m += k;
                return;
            }
        items.push_back({b, k});
    }
    int count(const Binomial& b) const {
        for (const auto& [x, m] : items)
            if (x == b) return m;
        return 0;
    }
};

}  // namespace

Poly symmetric_sum(const SymTemplate& tmpl, const Exponent& mu) {
    SymTemplate t = tmpl;
    t.cancel_common();
    const int n = t.n;
    if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("exponent arity mismatch");

    Exponent e = t.mono;
    for (int i = 0; i < n; ++i) e[i] += mu[i];
    Poly upstairs = Poly::monomial(e, t.scalar);
    for (const auto& b : t.num) upstairs *= b.poly(n);

    auto perms = permutations(n);
    std::vector<Multiset> dens(perms.size());
    std::vector<RatFuncQ> signs(perms.size(), RatFuncQ(1));
    Multiset lcm;
    for (size_t s = 0; s < perms.size(); ++s) {
        for (const auto& b : t.den) {
            auto [pb, sc] = permute_binomial(b, perms[s]);
            dens[s].add(pb);
            signs[s] *= sc;
        }
        for (const auto& [b, m] : dens[s].items)
            if (m > lcm.count(b)) lcm.add(b, m - lcm.count(b));
    }

    Poly total(n);
    for (size_t s = 0; s < perms.size(); ++s) {
        Poly term = upstairs.permuted(perms[s]) * signs[s].inverse();
        for (const auto& [b, m] : lcm.items)
            for (int k = dens[s].count(b); k < m; ++k) term *= b.poly(n);
        total += term;
    }
    Poly common = Poly::constant(n, RatFuncQ(1));
    for (const auto& [b, m] : lcm.items)
        for (int k = 0; k < m; ++k) common *= b.poly(n);
    auto q = total.exact_div(common);
    if (!q) throw std::domain_error("orbit sum is not a Laurent polynomial");
    return *q;
}

bool is_symmetric(const Poly& f) { return f.is_symmetric(); }

Poly elementary(int n, int k) {
    Poly r(n);
    std::vector<int> pick(static_cast<size_t>(n), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do r.add_term(pick, RatFuncQ(1));
    while (std::next_permutation(pick.begin(), pick.end()));
    return r;
}

Poly reduction_combination(const SymTemplate& t, const Exponent& lam, int l) {
    const int n = t.n;
    Poly r(n);
    for (int i = 1; i <= n; ++i) {
        Exponent mu = lam;
        mu[static_cast<size_t>(l)] -= i;
        RatFuncQ c = (i - 1) % 2 == 0 ? RatFuncQ(1) : RatFuncQ(-1);
        r += elementary(n, i) * symmetric_sum(t, mu) * c;
    }
    return r;
}

std::string ElemSymExpr::to_string() const {
    std::string body = poly.to_string([](const RatFuncQ& c) { return c.to_string(); }, "s");
    if (sn_inv == 0) return body;
    return "(" + body + ")*s" + std::to_string(n) + "^" + std::to_string(-sn_inv);
}

ElemSymExpr to_elementary(const Poly& f) {
    const int n = f.arity();
    if (!f.is_symmetric()) throw std::invalid_argument("to_elementary needs a symmetric polynomial");
    ElemSymExpr out{n, Poly(n), 0};
    if (f.is_zero()) return out;

    Exponent lo = f.min_exponent();
    int k = std::max(0, -*std::min_element(lo.begin(), lo.end()));
    out.sn_inv = k;
    Poly rest = f.shifted(Exponent(static_cast<size_t>(n), k));

    std::vector<Poly> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[i] = elementary(n, i + 1);
    std::vector<std::vector<Poly>> pw(static_cast<size_t>(n));
    auto power = [&](int i, int b) -> const Poly& {
        auto& cache = pw[static_cast<size_t>(i)];
        if (cache.empty()) cache.push_back(Poly::constant(n, RatFuncQ(1)));
        while (static_cast<int>(cache.size()) <= b) cache.push_back(cache.back() * e[i]);
        return cache[static_cast<size_t>(b)];
    };

    while (!rest.is_zero()) {
        auto [a, c] = *rest.terms().rbegin();
        Exponent b(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            b[i] = a[i] - (i + 1 < n ? a[i + 1] : 0);
            if (b[i] < 0) throw std::logic_error("lex-leading exponent not decreasing");
        }
        Poly sub = Poly::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (b[i]) sub *= power(i, b[i]);
        rest -= sub;
        out.poly.add_term(b, c);
    }

    // absorb common s_n factors into the inverse power
    if (k > 0) {
        int common = out.poly.min_exponent()[static_cast<size_t>(n - 1)];
        int j = std::min(k, common);
        if (j > 0) {
            Exponent sh(static_cast<size_t>(n), 0);
            sh[static_cast<size_t>(n - 1)] = -j;
            out.poly = out.poly.shifted(sh);
            out.sn_inv -= j;
        }
    }
    return out;
}

Poly from_elementary(const ElemSymExpr& es) {
    const int n = es.n;
    Poly r(n);
    std::vector<Poly> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[i] = elementary(n, i + 1);
    for (const auto& [b, c] : es.poly.terms()) {
        Poly t = Poly::constant(n, c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < b[i]; ++k) t *= e[i];
        r += t;
    }
    return r.shifted(Exponent(static_cast<size_t>(n), -es.sn_inv));
}

// ---- Groebner ----

bool mono_less(const Exponent& a, const Exponent& b, MonomialOrder ord) {
    if (ord == MonomialOrder::Lex) return a < b;
    int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

GPoly::GPoly(int arity, Terms terms) : arity_(arity) {
    for (auto& [e, c] : terms)
        if (!qherm::is_zero(c)) terms_.emplace(e, c);
}

void GPoly::add_term(const Exponent& e, const ExactRational& c) {
    if (qherm::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (qherm::is_zero(it->second)) terms_.erase(it);
    }
}

std::pair<Exponent, ExactRational> GPoly::lead(MonomialOrder ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (mono_less(best->first, it->first, ord)) best = it;
    return *best;
}

GPoly& GPoly::operator+=(const GPoly& o) {
    if (arity_ == 0) arity_ = o.arity_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GPoly& GPoly::operator-=(const GPoly& o) {
    if (arity_ == 0) arity_ = o.arity_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GPoly operator*(const GPoly& a, const GPoly& b) {
    GPoly r(std::max(a.arity_, b.arity_));
    Exponent e(static_cast<size_t>(r.arity_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

GPoly GPoly::scaled(const ExactRational& c, const Exponent& shift) const {
    GPoly r(arity_);
    if (qherm::is_zero(c)) return r;
    for (const auto& [e, v] : terms_) {
        Exponent f = e;
        for (size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
        r.terms_.emplace(std::move(f), v * c);
    }
    return r;
}

GPoly GPoly::monic(MonomialOrder ord) const {
    if (is_zero()) return *this;
    return scaled(ExactRational(1) / lead(ord).second, Exponent(static_cast<size_t>(arity_), 0));
}

std::string GPoly::to_string(const char* var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << qherm::to_string(it->second);
        for (size_t i = 0; i < it->first.size(); ++i) {
            int k = it->first[i];
            if (k == 0) continue;
            os << "*" << var << (i + 1);
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

GPoly specialize(const ElemSymExpr& es, const ExactRational& q0) {
    GPoly r(es.n);
    for (const auto& [e, c] : es.poly.terms()) r.add_term(e, c.eval(q0));
    return r;
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent lcm_exp(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponent diff(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

GPoly s_poly(const GPoly& f, const GPoly& g, MonomialOrder ord) {
    auto [ef, cf] = f.lead(ord);
    auto [eg, cg] = g.lead(ord);
    Exponent l = lcm_exp(ef, eg);
    return f.scaled(ExactRational(1) / cf, diff(l, ef)) - g.scaled(ExactRational(1) / cg, diff(l, eg));
}

}  // namespace

GPoly normal_form(const GPoly& f, const std::vector<GPoly>& basis, MonomialOrder ord) {
    GPoly rem(f.arity()), p = f;
    std::vector<std::pair<Exponent, ExactRational>> leads;
    for (const auto& g : basis) leads.push_back(g.lead(ord));
    while (!p.is_zero()) {
        auto [e, c] = p.lead(ord);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!divides(leads[k].first, e)) continue;
            p -= basis[k].scaled(c / leads[k].second, diff(e, leads[k].first));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(e, c);
            GPoly t(p.arity());
            t.add_term(e, c);
            p -= t;
        }
    }
    return rem;
}

IdealBasis buchberger(const std::vector<GPoly>& gens, MonomialOrder ord) {
    IdealBasis out;
    out.order = ord;
    out.generators = gens;
    for (const auto& g : gens) out.arity = std::max(out.arity, g.arity());

    std::vector<GPoly> g;
    for (const auto& f : gens)
        if (!f.is_zero()) g.push_back(f.monic(ord));
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < g.size(); ++j)
        for (size_t i = 0; i < j; ++i) pairs.push_back({i, j});

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.erase(pairs.begin());
        Exponent li = g[i].lead(ord).first, lj = g[j].lead(ord).first;
        bool coprime = true;
        for (size_t k = 0; k < li.size(); ++k)
            if (li[k] && lj[k]) coprime = false;
        if (coprime) continue;
        GPoly h = normal_form(s_poly(g[i], g[j], ord), g, ord);
        if (h.is_zero()) continue;
        g.push_back(h.monic(ord));
        for (size_t k = 0; k + 1 < g.size(); ++k) pairs.push_back({k, g.size() - 1});
    }

    // minimal, then reduced
    std::vector<GPoly> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        Exponent li = g[i].lead(ord).first;
        bool drop = false;
        for (size_t j = 0; j < g.size() && !drop; ++j) {
            if (i == j) continue;
            Exponent lj = g[j].lead(ord).first;
            if (divides(lj, li) && (lj != li || j < i)) drop = true;
        }
        if (!drop) minimal.push_back(g[i]);
    }
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        auto [e, c] = minimal[i].lead(ord);
        GPoly tail = minimal[i];
        GPoly lt(tail.arity());
        lt.add_term(e, c);
        tail -= lt;
        minimal[i] = (lt + normal_form(tail, others, ord)).monic(ord);
    }
    std::sort(minimal.begin(), minimal.end(), [ord](const GPoly& a, const GPoly& b) {
        return mono_less(b.lead(ord).first, a.lead(ord).first, ord);
    });
    out.basis = std::move(minimal);
    return out;
}

bool ideal_member(const GPoly& f, const IdealBasis& ideal) {
    if (!f.is_zero() && f.arity() != ideal.arity) throw std::invalid_argument("arity mismatch in ideal_member");
    return normal_form(f, ideal.basis, ideal.order).is_zero();
}

}  // namespace qherm
