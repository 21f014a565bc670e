#include "qherm/density.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

namespace qherm {

// ---- Partition ----

bool Partition::valid(const std::vector<int>& parts) {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) return false;
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if ((parts[i] % 2 != 0) && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!valid(parts_)) throw std::invalid_argument("not in Lambda_n: " + to_string());
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad partition entry: " + item);
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return Partition(parts);
}

int Partition::weight() const {
    int s = 0;
    for (int v : parts_) s += v;
    return s;
}

bool Partition::all_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int v) { return v % 2 == 0; });
}

Partition Partition::shifted(int by) const {
    std::vector<int> r = parts_;
    for (int& v : r) v += by;
    return Partition(r);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

long partition_n(const Partition& alpha) {
    long s = 0;
    for (int i = 0; i < alpha.size(); ++i) s += static_cast<long>(i) * alpha[i];
    return s;
}

// ---- Gram matrices ----

namespace {

i64 p_power_mod(i64 p, int e, i64 m) {
    i64 r = 1 % m;
    for (int i = 0; i < e; ++i) r = r * p % m;
    return r;
}

}  // namespace

HermMatrix build_gram(const Partition& alpha, const RingParams& rp) {
    const int n = alpha.size();
    QuatMatrix g(n, n);
    for (int i = 0; i < n;) {
        int v = alpha[i];
        if (v < 0) throw std::invalid_argument("negative entries need a shift first: " + alpha.to_string());
        if (v % 2 == 0) {
            g(i, i) = QuatElem::scalar(p_power_mod(rp.p, v / 2, rp.modulus));
            ++i;
        } else {
            i64 c = p_power_mod(rp.p, (v - 1) / 2, rp.modulus);
            g(i, i + 1) = {0, 0, c, 0};
            g(i + 1, i) = {0, 0, mod_reduce(-c, rp.modulus), 0};
            i += 2;
        }
    }
    return HermMatrix(g, rp);
}

HermMatrix zero_form(int n, const RingParams& rp) { return HermMatrix(QuatMatrix(n, n), rp); }

FormBuilder gram_builder(const Partition& alpha) {
    return [alpha](const RingParams& rp) { return build_gram(alpha, rp); };
}

FormBuilder zero_builder(int n) {
    return [n](const RingParams& rp) { return zero_form(n, rp); };
}

// ---- counting ----

long normalization_exponent(int ell, int m, int n) {
    return static_cast<long>(ell) * n * (4 * m - 2 * n + 1) + static_cast<long>(n) * (n - 1);
}

namespace {

template <class F>
void run_chunks(int threads, std::uint64_t total, F fn) {
    threads = std::max(1, threads);
    if (threads == 1 || total < 1024) {
        fn(std::uint64_t(0), total, 0);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    std::uint64_t step = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = std::min(total, step * t), hi = std::min(total, lo + step);
        pool.emplace_back([&fn, &errors, lo, hi, t] {
            try {
                fn(lo, hi, t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

struct ElemTables {
    std::vector<QuatElem> elems;
    std::vector<i64> nrd;
    std::vector<char> unit;  // residue mod P is nonzero
};

ElemTables make_tables(const RingParams& rp) {
    ElemTables t;
    i64 size = rp.modulus * rp.modulus * rp.modulus * rp.modulus;
    t.elems.resize(static_cast<size_t>(size));
    t.nrd.resize(static_cast<size_t>(size));
    t.unit.resize(static_cast<size_t>(size));
    for (i64 k = 0; k < size; ++k) {
        QuatElem x = decode_elem(k, rp);
        t.elems[k] = x;
        t.nrd[k] = quat_nrd(x, rp);
        t.unit[k] = (x.a % rp.p != 0) || (x.b % rp.p != 0);
    }
    return t;
}

std::uint64_t checked_power(std::uint64_t base, int e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// Scalar part of u* A u for the vector with element indices idx.
i64 herm_value(const std::vector<i64>& idx, const HermMatrix& a, const ElemTables& t, const RingParams& rp) {
    const int m = a.size();
    const i64 mod = rp.modulus;
    i64 s = 0;
    for (int i = 0; i < m; ++i) {
        i64 aii = a(i, i).a;
        if (aii) s = (s + aii * t.nrd[idx[i]]) % mod;
        for (int j = i + 1; j < m; ++j) {
            const QuatElem& aij = a(i, j);
            if (aij.is_zero()) continue;
            QuatElem x = quat_mul(quat_conj(t.elems[idx[i]], rp), quat_mul(aij, t.elems[idx[j]], rp), rp);
            s = (s + 2 * x.a) % mod;
        }
    }
    return s;
}


// Index of x mod P^j. P^{2r} bounds every coordinate by p^r, P^{2r+1} keeps
// a, b mod p^{r+1} and c, d mod p^r.
struct LevelIndex {
    i64 ab = 1, cd = 1;
    LevelIndex(i64 p, int j) {
        for (int i = 0; i < (j + 1) / 2; ++i) ab *= p;
        for (int i = 0; i < j / 2; ++i) cd *= p;
    }
    std::uint64_t size() const { return static_cast<std::uint64_t>(ab * ab * cd * cd); }
    std::uint64_t operator()(const QuatElem& x) const {
        return static_cast<std::uint64_t>(x.a % ab + ab * (x.b % ab + ab * (x.c % cd + cd * (x.d % cd))));
    }
};

// y with Pi^v y = x, valid modulo P^{2l - v}; x must lie in P^v.
QuatElem left_div_pi(QuatElem x, int v, const RingParams& rp) {
    i64 pt = 1;
    for (int i = 0; i < v / 2; ++i) pt *= rp.p;
    x = {x.a / pt, x.b / pt, x.c / pt, x.d / pt};
    if (v % 2) x = {x.c, x.d, x.a / rp.p, x.b / rp.p};
    return x;
}

i64 inverse_mod(i64 x, i64 m) {
    i64 g = m, r = mod_reduce(x, m), s0 = 0, s1 = 1;
    while (r) {
        i64 q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (g != 1) throw std::domain_error("not invertible");
    return mod_reduce(s0, m);
}

QuatElem quat_inverse(const QuatElem& x, const RingParams& rp) {
    i64 ni = inverse_mod(quat_nrd(x, rp), rp.modulus);
    QuatElem c = quat_conj(x, rp);
    return reduce({c.a * ni, c.b * ni, c.c * ni, c.d * ni}, rp);
}

// n = m = 2. For a fixed first column u the condition u* A w - B_12 in
// P^{2l-1} is left-linear in the second column w. Writing u* A = Pi^v (g_1, g_2)
// with some g_r a unit turns it into w_1 + d w_2 = s (or d w_1 + w_2 = s)
// modulo P^{2l-1-v}, answered from histograms over the second-column
// candidates.
BigInt count_pairs_linear(const HermMatrix& b, const HermMatrix& a, const RingParams& rp,
                          const std::vector<QuatElem>& elems, std::uint64_t elem_count,
                          const std::vector<std::uint64_t>& first, const std::vector<std::uint64_t>& second) {
    const int k = 2 * rp.ell - 1;
    LevelIndex top(rp.p, k);
    auto split = [&](std::uint64_t idx) {
        return std::make_pair(elems[idx % elem_count], elems[idx / elem_count]);
    };
    // second column classes mod P^k
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::pair<QuatElem, QuatElem>, std::uint64_t>> cls2;
    for (std::uint64_t idx : second) {
        auto w = split(idx);
        auto& slot = cls2[{top(w.first), top(w.second)}];
        if (slot.second++ == 0) slot.first = w;
    }
    std::uint64_t total2 = second.size();
    // first column classes mod P^k
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::pair<QuatElem, QuatElem>, std::uint64_t>> cls1;
    for (std::uint64_t idx : first) {
        auto u = split(idx);
        auto& slot = cls1[{top(u.first), top(u.second)}];
        if (slot.second++ == 0) slot.first = u;
    }

    // histograms keyed by (level, which coordinate is the unit, d)
    std::map<std::tuple<int, int, std::uint64_t>, std::vector<std::uint64_t>> hist;
    auto histogram = [&](int j, int unit_pos, const QuatElem& d) -> const std::vector<std::uint64_t>& {
        LevelIndex li(rp.p, j);
        auto key = std::make_tuple(j, unit_pos, li(d));
        auto it = hist.find(key);
        if (it != hist.end()) return it->second;
        std::vector<std::uint64_t> h(li.size(), 0);
        for (const auto& [ck, entry] : cls2) {
            const auto& [w, mult] = entry;
            QuatElem s = unit_pos == 0 ? quat_add(w.first, quat_mul(d, w.second, rp), rp)
                                       : quat_add(quat_mul(d, w.first, rp), w.second, rp);
            h[li(s)] += mult;
        }
        return hist.emplace(key, std::move(h)).first->second;
    };

    const QuatElem b12 = b(0, 1);
    auto vb = pi_valuation(b12, rp);
    const int val_b = vb ? *vb : 2 * rp.ell;
    BigInt total = 0;
    for (const auto& [ck, entry] : cls1) {
        const auto& [u, mult] = entry;
        QuatElem uc0 = quat_conj(u.first, rp), uc1 = quat_conj(u.second, rp);
        QuatElem g0 = quat_add(quat_mul(uc0, a(0, 0), rp), quat_mul(uc1, a(1, 0), rp), rp);
        QuatElem g1 = quat_add(quat_mul(uc0, a(0, 1), rp), quat_mul(uc1, a(1, 1), rp), rp);
        auto v0 = pi_valuation(g0, rp), v1 = pi_valuation(g1, rp);
        int v = std::min(v0 ? *v0 : 2 * rp.ell, v1 ? *v1 : 2 * rp.ell);
        std::uint64_t cnt = 0;
        if (v >= k) {
            cnt = val_b >= k ? total2 : 0;
        } else if (val_b >= v) {
            int j = k - v;
            QuatElem h0 = left_div_pi(g0, v, rp), h1 = left_div_pi(g1, v, rp), c = left_div_pi(b12, v, rp);
            bool first_unit = (h0.a % rp.p) || (h0.b % rp.p);
            QuatElem inv = quat_inverse(first_unit ? h0 : h1, rp);
            QuatElem d = quat_mul(inv, first_unit ? h1 : h0, rp);
            QuatElem s = quat_mul(inv, c, rp);
            cnt = histogram(j, first_unit ? 0 : 1, d)[LevelIndex(rp.p, j)(s)];
        }
        total += BigInt(static_cast<unsigned long>(mult)) * static_cast<unsigned long>(cnt);
    }
    return total;
}

}  // namespace

BigInt count_reps(const HermMatrix& b, const HermMatrix& a, const RingParams& rp, bool primitive,
                  const CountOptions& opts) {
    const int m = a.size(), n = b.size();
    if (m < n) throw std::invalid_argument("count_reps needs m >= n");
    const std::uint64_t elem_count = static_cast<std::uint64_t>(rp.modulus) * rp.modulus * rp.modulus * rp.modulus;
    const std::uint64_t total = checked_power(elem_count, m, opts.budget);
    if (total > opts.budget)
        throw BudgetExceeded("enumeration of " + std::to_string(elem_count) + "^" + std::to_string(m) +
                             " column vectors exceeds the budget");
    const ElemTables tables = make_tables(rp);

    std::vector<i64> targets(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) targets[j] = b(j, j).a;
    std::vector<i64> distinct = targets;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const int threads = std::max(1, opts.threads);
    // per chunk: candidate vector indices for each distinct target (n >= 2),
    // or plain counts (n == 1)
    std::vector<std::vector<std::vector<std::uint64_t>>> found(
        static_cast<size_t>(threads), std::vector<std::vector<std::uint64_t>>(distinct.size()));
    std::vector<std::uint64_t> counted(static_cast<size_t>(threads), 0);
    run_chunks(threads, total, [&](std::uint64_t lo, std::uint64_t hi, int chunk) {
        auto& mine = found[chunk];
        std::uint64_t cnt = 0;
        std::vector<i64> idx(static_cast<size_t>(m));
        for (std::uint64_t k = lo; k < hi; ++k) {
            std::uint64_t r = k;
            for (int i = 0; i < m; ++i) {
                idx[i] = static_cast<i64>(r % elem_count);
                r /= elem_count;
            }
            i64 v = herm_value(idx, a, tables, rp);
            auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
            if (it == distinct.end() || *it != v) continue;
            if (n == 1) {
                if (primitive && !std::any_of(idx.begin(), idx.end(), [&](i64 e) { return tables.unit[e]; }))
                    continue;
                ++cnt;
            } else {
                mine[it - distinct.begin()].push_back(k);
            }
        }
        counted[chunk] = cnt;
    });

    if (n == 1) {
        BigInt sum = 0;
        for (auto c : counted) sum += static_cast<unsigned long>(c);
        return sum;
    }

    if (n == 2 && m == 2 && !primitive && opts.linear_pairs) {
        std::vector<std::vector<std::uint64_t>> col(2);
        for (int j = 0; j < 2; ++j) {
            size_t d = std::lower_bound(distinct.begin(), distinct.end(), targets[j]) - distinct.begin();
            for (auto& chunk : found) col[j].insert(col[j].end(), chunk[d].begin(), chunk[d].end());
        }
        return count_pairs_linear(b, a, rp, tables.elems, elem_count, col[0], col[1]);
    }

    // Off-diagonal conditions and the residue rank only see each column mod
    // P^{2l-1}, so candidates are bucketed by that class with multiplicities.
    const i64 low_mod = rp.modulus / rp.p;  // c, d are kept mod p^{l-1}
    auto class_of = [&](std::uint64_t k) {
        std::vector<QuatElem> v(static_cast<size_t>(m));
        std::uint64_t key = 0, scale = 1;
        const std::uint64_t per = static_cast<std::uint64_t>(rp.modulus * rp.modulus * low_mod * low_mod);
        for (int i = 0; i < m; ++i) {
            QuatElem x = tables.elems[k % elem_count];
            k /= elem_count;
            x.c %= low_mod;
            x.d %= low_mod;
            v[i] = x;
            key += scale * static_cast<std::uint64_t>(x.a + rp.modulus * (x.b + rp.modulus * (x.c + low_mod * x.d)));
            scale *= per;
        }
        return std::make_pair(key, v);
    };

    struct ColumnClass {
        std::uint64_t mult = 0;
        std::vector<QuatElem> rep, a_rep, conj_rep;
    };
    std::vector<std::vector<ColumnClass>> classes(distinct.size());
    for (size_t d = 0; d < distinct.size(); ++d) {
        std::map<std::uint64_t, ColumnClass> bucket;
        for (auto& chunk : found)
            for (std::uint64_t k : chunk[d]) {
                auto [key, v] = class_of(k);
                auto& cls = bucket[key];
                if (cls.mult++ == 0) cls.rep = std::move(v);
            }
        for (auto& [key, cls] : bucket) {
            cls.a_rep.resize(static_cast<size_t>(m));
            cls.conj_rep.resize(static_cast<size_t>(m));
            for (int r = 0; r < m; ++r) {
                QuatElem acc;
                for (int s = 0; s < m; ++s) acc = quat_add(acc, quat_mul(a(r, s), cls.rep[s], rp), rp);
                cls.a_rep[r] = acc;
                cls.conj_rep[r] = quat_conj(cls.rep[r], rp);
            }
            classes[d].push_back(std::move(cls));
        }
    }
    std::vector<const std::vector<ColumnClass>*> column(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        column[j] = &classes[std::lower_bound(distinct.begin(), distinct.end(), targets[j]) - distinct.begin()];

    auto offdiag_ok = [&](const ColumnClass& ci, const ColumnClass& cj, int i, int j) {
        QuatElem acc;
        for (int r = 0; r < m; ++r) acc = quat_add(acc, quat_mul(ci.conj_rep[r], cj.a_rep[r], rp), rp);
        acc = quat_sub(acc, b(i, j), rp);
        auto v = pi_valuation(acc, rp);
        return !v || *v >= 2 * rp.ell - 1;
    };

    const std::uint64_t node_budget = opts.budget;
    std::vector<BigInt> sub_counts(column[0]->size(), 0);
    run_chunks(threads, column[0]->size(), [&](std::uint64_t lo, std::uint64_t hi, int) {
        std::vector<const ColumnClass*> pick(static_cast<size_t>(n));
        std::uint64_t nodes = 0;
        for (std::uint64_t first = lo; first < hi; ++first) {
            pick[0] = &(*column[0])[first];
            BigInt cnt = 0;
            std::vector<size_t> next(static_cast<size_t>(n), 0);
            int depth = 1;
            while (depth >= 1) {
                if (next[depth] >= column[depth]->size()) {
                    --depth;
                    if (depth >= 1) ++next[depth];
                    continue;
                }
                const ColumnClass& c = (*column[depth])[next[depth]];
                if (++nodes > node_budget) throw BudgetExceeded("backtracking exceeds the budget");
                bool ok = true;
                for (int i = 0; i < depth && ok; ++i) ok = offdiag_ok(*pick[i], c, i, depth);
                if (!ok) {
                    ++next[depth];
                    continue;
                }
                pick[depth] = &c;
                if (depth + 1 < n) {
                    ++depth;
                    next[depth] = 0;
                    continue;
                }
                bool keep = true;
                if (primitive) {
                    QuatMatrix u(m, n);
                    for (int j = 0; j < n; ++j)
                        for (int r = 0; r < m; ++r) u(r, j) = pick[j]->rep[r];
                    keep = residue_rank(u, rp) == n;
                }
                if (keep) {
                    BigInt w = 1;
                    for (int j = 0; j < n; ++j) w *= static_cast<unsigned long>(pick[j]->mult);
                    cnt += w;
                }
                ++next[depth];
            }
            sub_counts[first] = cnt;
        }
    });
    BigInt sum = 0;
    for (const auto& c : sub_counts) sum += c;
    return sum;
}

BigInt count_reps_convolved(const HermMatrix& b, const HermMatrix& a, const RingParams& rp, bool primitive) {
    if (b.size() != 1) throw std::invalid_argument("convolution path needs n = 1");
    if (!a.is_diagonal()) throw std::invalid_argument("convolution path needs a diagonal form");
    const i64 mod = rp.modulus;
    const i64 elem_count = mod * mod * mod * mod;
    // histograms of Nrd over all of O/P^{2l} and over P/P^{2l}
    std::vector<BigInt> all(static_cast<size_t>(mod), 0), inside(static_cast<size_t>(mod), 0);
    {
        std::vector<std::uint64_t> h(static_cast<size_t>(mod), 0), hp(static_cast<size_t>(mod), 0);
        for (i64 k = 0; k < elem_count; ++k) {
            QuatElem x = decode_elem(k, rp);
            i64 v = quat_nrd(x, rp);
            ++h[v];
            if (x.a % rp.p == 0 && x.b % rp.p == 0) ++hp[v];
        }
        for (i64 v = 0; v < mod; ++v) {
            all[v] = static_cast<unsigned long>(h[v]);
            inside[v] = static_cast<unsigned long>(hp[v]);
        }
    }
    auto convolve_all = [&](const std::vector<BigInt>& base) {
        std::vector<BigInt> acc(static_cast<size_t>(mod), 0);
        acc[0] = 1;
        for (int i = 0; i < a.size(); ++i) {
            i64 coef = a(i, i).a;
            std::vector<BigInt> scaled(static_cast<size_t>(mod), 0);
            for (i64 v = 0; v < mod; ++v) scaled[(coef * v) % mod] += base[v];
            std::vector<BigInt> next(static_cast<size_t>(mod), 0);
            for (i64 s = 0; s < mod; ++s) {
                if (acc[s] == 0) continue;
                for (i64 v = 0; v < mod; ++v)
                    if (scaled[v] != 0) next[(s + v) % mod] += acc[s] * scaled[v];
            }
            acc = std::move(next);
        }
        return acc;
    };
    i64 target = b(0, 0).a;
    BigInt total = convolve_all(all)[target];
    if (!primitive) return total;
    return total - convolve_all(inside)[target];
}

// ---- density series ----

bool DensitySeries::stable() const {
    return levels.size() >= 2 && levels[levels.size() - 1].normalized == levels[levels.size() - 2].normalized;
}

DensitySeries density_limit(const FormBuilder& b, const FormBuilder& a, i64 p, const std::vector<int>& ells,
                            bool primitive, CountMethod method, i64 eps2, const CountOptions& opts) {
    DensitySeries out;
    for (int ell : ells) {
        RingParams rp = make_params(p, ell, eps2);
        HermMatrix bm = b(rp), am = a(rp);
        DensityResult r;
        r.level = ell;
        r.primitive = primitive;
        r.count = method == CountMethod::Convolve ? count_reps_convolved(bm, am, rp, primitive)
                                                  : count_reps(bm, am, rp, primitive, opts);
        r.normalized = ExactRational(r.count) / pow(ExactRational(p), normalization_exponent(ell, am.size(), bm.size()));
        r.normalized.canonicalize();
        out.levels.push_back(r);
    }
    return out;
}

// ---- closed formulas ----

namespace {
RatFuncQ qp(int k) { return RatFuncQ::q_pow(k); }
}  // namespace

RatFuncQ density_self_closed(const Partition& alpha) {
    long odd = 0;
    for (int v : alpha.parts())
        if (v % 2 != 0) ++odd;
    long twice = 4 * partition_n(alpha) + alpha.weight() + odd;  // twice the q-exponent
    RatFuncQ r = qp(static_cast<int>(twice / 2));
    const auto& a = alpha.parts();
    for (size_t i = 0; i < a.size();) {
        size_t j = i;
        while (j < a.size() && a[j] == a[i]) ++j;
        int mult = static_cast<int>(j - i);
        if (a[i] % 2 == 0)
            r *= w_factor(mult, -qp(-1));
        else
            r *= w_factor(mult / 2, qp(-4));
        i = j;
    }
    return r;
}

RatFuncQ density_unit_closed(int n) { return w_factor(n, -qp(-1)); }

RatFuncQ density_unit_primitive(int n) { return RatFuncQ(1) - (-qp(-1)).pow(n); }

RatFuncQ density_zero_ht(int t) { return qp(1) * (RatFuncQ(1) - qp(-4 * t)); }

RatFuncQ density_ht_closed(int t) { return qp(4 * t * t) * w_factor(t, qp(-4)); }

RatFuncQ apply_shift(const RatFuncQ& value, int e, int n) { return value * qp(e * n * (2 * n - 1)); }

DensityResult apply_shift(const DensityResult& value, int e, int n, i64 p) {
    DensityResult r = value;
    r.normalized *= pow(ExactRational(p), static_cast<long>(e) * n * (2 * n - 1));
    return r;
}

bool decomposition_applies(const Partition& alpha, int n) {
    int m = alpha.size();
    if (n <= 0 || n >= m) return false;
    std::vector<int> gamma(alpha.parts().begin(), alpha.parts().begin() + (m - n));
    std::vector<int> beta(alpha.parts().begin() + (m - n), alpha.parts().end());
    return Partition::valid(gamma) && Partition::valid(beta) && gamma.back() > beta.front();
}

RatFuncQ decomposition_rhs(const Partition& alpha, int n) {
    if (!decomposition_applies(alpha, n)) throw std::invalid_argument("decomposition does not apply");
    int m = alpha.size();
    Partition gamma(std::vector<int>(alpha.parts().begin(), alpha.parts().begin() + (m - n)));
    Partition beta(std::vector<int>(alpha.parts().begin() + (m - n), alpha.parts().end()));
    return qp(2 * (m - n) * beta.weight()) * density_self_closed(beta) * density_self_closed(gamma);
}

Partition key_beta(const Partition& alpha) {
    if (alpha.size() < 2) throw std::invalid_argument("key_beta needs n >= 2");
    std::vector<int> beta(alpha.parts().begin() + 1, alpha.parts().end());
    if (alpha[0] % 2 != 0) beta[0] += 1;
    return Partition(beta);
}

}  // namespace qherm
