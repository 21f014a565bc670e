#include "qherm/exact.hpp"

#include <algorithm>
#include <sstream>

namespace qherm {

std::string to_string(const ExactRational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

ExactRational parse_rational(const std::string& text) {
    ExactRational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (r.get_den() == 0) throw DivisionByZero("zero denominator in " + text);
    r.canonicalize();
    return r;
}

ExactRational pow(const ExactRational& base, long exponent) {
    if (exponent < 0) {
        if (is_zero(base)) throw DivisionByZero("0 to a negative power");
        return pow(ExactRational(1) / base, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    ExactRational r(num, den);
    r.canonicalize();
    return r;
}

// ---- QPoly ----

QPoly::QPoly(const ExactRational& c) {
    if (!qherm::is_zero(c)) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const ExactRational& c, int degree) {
    QPoly r;
    if (qherm::is_zero(c)) return r;
    r.coeffs_.assign(static_cast<size_t>(degree) + 1, ExactRational(0));
    r.coeffs_.back() = c;
    return r;
}

void QPoly::trim() {
    while (!coeffs_.empty() && qherm::is_zero(coeffs_.back())) coeffs_.pop_back();
}

ExactRational QPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

int QPoly::low_degree() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!qherm::is_zero(coeffs_[i])) return static_cast<int>(i);
    return 0;
}

QPoly QPoly::shift_down(int k) const {
    if (k == 0) return *this;
    QPoly r;
    r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return r;
}

QPoly QPoly::shift_up(int k) const {
    if (k == 0 || is_zero()) return *this;
    QPoly r;
    r.coeffs_.assign(static_cast<size_t>(k), ExactRational(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    QPoly r = *this;
    ExactRational inv = 1 / lead();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

ExactRational QPoly::eval(const ExactRational& at) const {
    ExactRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ExactRational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), ExactRational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<ExactRational> out(coeffs_.size() + o.coeffs_.size() - 1, ExactRational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (qherm::is_zero(coeffs_[i])) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    QPoly quot, rem = a;
    if (a.degree() < b.degree()) return {quot, rem};
    quot.coeffs_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, ExactRational(0));
    ExactRational inv = 1 / b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        ExactRational c = rem.lead() * inv;
        quot.coeffs_[static_cast<size_t>(shift)] = c;
        for (int i = 0; i <= b.degree(); ++i) rem.coeffs_[static_cast<size_t>(i + shift)] -= c * b.coeffs_[static_cast<size_t>(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

QPoly QPoly::exact_div(const QPoly& b) const {
    auto [quot, rem] = divmod(*this, b);
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    return quot;
}

std::string QPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const ExactRational& c = coeffs_[static_cast<size_t>(i)];
        if (qherm::is_zero(c)) continue;
        ExactRational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (!unit || i == 0) os << qherm::to_string(mag);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = QPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---- RatFuncQ ----

RatFuncQ::RatFuncQ(const ExactRational& c) : num_(c), den_(1) {}

RatFuncQ::RatFuncQ(const QPoly& p) : num_(p), den_(1) { normalize(); }

RatFuncQ::RatFuncQ(const QPoly& num, const QPoly& den, int shift) : num_(num), den_(den), shift_(shift) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

RatFuncQ RatFuncQ::q_pow(int k) {
    RatFuncQ r(1);
    r.shift_ = k;
    return r;
}

void RatFuncQ::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        shift_ = 0;
        return;
    }
    int ln = num_.low_degree(), ld = den_.low_degree();
    if (ln) num_ = num_.shift_down(ln);
    if (ld) den_ = den_.shift_down(ld);
    shift_ += ln - ld;
    if (den_.degree() > 0) {
        QPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    if (den_.lead() != 1) {
        ExactRational inv = 1 / den_.lead();
        num_ *= QPoly(inv);
        den_ *= QPoly(inv);
    }
}

std::pair<QPoly, QPoly> RatFuncQ::cleared() const {
    if (shift_ >= 0) return {num_.shift_up(shift_), den_};
    return {num_, den_.shift_up(-shift_)};
}

ExactRational RatFuncQ::eval(const ExactRational& q0) const {
    ExactRational d = den_.eval(q0);
    if (qherm::is_zero(d) || (shift_ < 0 && qherm::is_zero(q0)))
        throw PoleError("pole at q = " + qherm::to_string(q0));
    return num_.eval(q0) / d * qherm::pow(q0, shift_);
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncQ& RatFuncQ::operator+=(const RatFuncQ& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int s = std::min(shift_, o.shift_);
    QPoly a = num_.shift_up(shift_ - s);
    QPoly b = o.num_.shift_up(o.shift_ - s);
    if (den_ == o.den_) {
        num_ = a + b;
        shift_ = s;
        if (den_.is_one()) {
            int ln = num_.is_zero() ? 0 : num_.low_degree();
            if (num_.is_zero()) shift_ = 0;
            else if (ln) {
                num_ = num_.shift_down(ln);
                shift_ += ln;
            }
            return *this;
        }
        normalize();
        return *this;
    }
    num_ = a * o.den_ + b * den_;
    den_ *= o.den_;
    shift_ = s;
    normalize();
    return *this;
}

RatFuncQ& RatFuncQ::operator-=(const RatFuncQ& o) { return *this += -o; }

RatFuncQ& RatFuncQ::operator*=(const RatFuncQ& o) {
    if (is_zero() || o.is_zero()) return *this = RatFuncQ();
    shift_ += o.shift_;
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFuncQ RatFuncQ::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return RatFuncQ(den_, num_, -shift_);
}

RatFuncQ& RatFuncQ::operator/=(const RatFuncQ& o) { return *this *= o.inverse(); }

RatFuncQ RatFuncQ::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFuncQ result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string RatFuncQ::to_string() const {
    auto [n, d] = cleared();
    std::string ns = n.to_string();
    if (d.is_one()) return ns;
    bool n_compound = n.degree() > 0 && n.to_string().find_first_of("+-", 1) != std::string::npos;
    bool d_compound = d.degree() > 0 && (d.to_string().find_first_of("+-", 1) != std::string::npos ||
                                          d.to_string().find('*') != std::string::npos);
    std::string out = n_compound ? "(" + ns + ")" : ns;
    std::string ds = d.to_string();
    out += "/" + (d_compound ? "(" + ds + ")" : ds);
    return out;
}

RatFuncQ w_factor(int m, const RatFuncQ& t) {
    RatFuncQ r(1), tp(1);
    for (int i = 1; i <= m; ++i) {
        tp *= t;
        r *= RatFuncQ(1) - tp;
    }
    return r;
}

}  // namespace qherm
