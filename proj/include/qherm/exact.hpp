#pragma once

// Exact coefficient arithmetic: rationals, polynomials in q over Q, and the
// rational function field Q(q).

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qherm {

using BigInt = mpz_class;
using ExactRational = mpq_class;

/// Raised on division by an exact zero.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a rational function is evaluated at one of its poles.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline bool is_zero(const ExactRational& x) { return sgn(x) == 0; }

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const ExactRational& x);
ExactRational parse_rational(const std::string& text);
ExactRational pow(const ExactRational& base, long exponent);

/// Univariate polynomial over Q in the variable q, dense storage by degree.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c) : QPoly(ExactRational(c)) {}
    QPoly(const ExactRational& c);
    explicit QPoly(std::vector<ExactRational> coeffs);

    static QPoly monomial(const ExactRational& c, int degree);
    static QPoly q() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    const ExactRational& lead() const { return coeffs_.back(); }
    ExactRational coeff(int i) const;
    const std::vector<ExactRational>& coeffs() const { return coeffs_; }

    /// Largest k with q^k dividing the polynomial (0 for the zero polynomial).
    int low_degree() const;
    /// Divide by q^k; requires k <= low_degree().
    QPoly shift_down(int k) const;
    QPoly shift_up(int k) const;

    QPoly monic() const;
    ExactRational eval(const ExactRational& at) const;

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    bool operator==(const QPoly& o) const = default;

    /// Quotient and remainder; throws DivisionByZero for b == 0.
    static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
    /// Quotient of an exact division; throws std::domain_error on a remainder.
    QPoly exact_div(const QPoly& b) const;

    std::string to_string(const char* var = "q") const;

private:
    void trim();
    std::vector<ExactRational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

/// Element of Q(q) kept as q^shift * num / den with num, den in Q[q],
/// den monic, gcd(num, den) = 1 and q dividing neither num nor den.
/// Zero is (0, 1, shift 0). The canonical record is unique, so equality is
/// structural.
class RatFuncQ {
public:
    RatFuncQ() : den_(1) {}
    RatFuncQ(long c) : RatFuncQ(ExactRational(c)) {}
    RatFuncQ(const ExactRational& c);
    RatFuncQ(const QPoly& p);
    /// General constructor; normalizes. Throws DivisionByZero if den == 0.
    RatFuncQ(const QPoly& num, const QPoly& den, int shift = 0);

    static RatFuncQ q() { return q_pow(1); }
    static RatFuncQ q_pow(int k);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    /// True when the value is c * q^k for a rational c.
    bool is_monomial() const { return num_.degree() == 0 && den_.is_one(); }
    /// True when the denominator is 1, i.e. the value is a Laurent polynomial in q.
    bool is_laurent() const { return den_.is_one(); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    int shift() const { return shift_; }

    /// Numerator and denominator with the q-power folded in, both in
    /// nonnegative powers of q.
    std::pair<QPoly, QPoly> cleared() const;

    ExactRational eval(const ExactRational& q0) const;

    RatFuncQ operator-() const;
    RatFuncQ& operator+=(const RatFuncQ& o);
    RatFuncQ& operator-=(const RatFuncQ& o);
    RatFuncQ& operator*=(const RatFuncQ& o);
    RatFuncQ& operator/=(const RatFuncQ& o);
    friend RatFuncQ operator+(RatFuncQ a, const RatFuncQ& b) { return a += b; }
    friend RatFuncQ operator-(RatFuncQ a, const RatFuncQ& b) { return a -= b; }
    friend RatFuncQ operator*(RatFuncQ a, const RatFuncQ& b) { return a *= b; }
    friend RatFuncQ operator/(RatFuncQ a, const RatFuncQ& b) { return a /= b; }
    bool operator==(const RatFuncQ& o) const = default;

    RatFuncQ inverse() const;
    RatFuncQ pow(int e) const;

    /// Readable form such as "q - 1" or "(q^2 + 1)/(q^3 - q)".
    std::string to_string() const;

private:
    void normalize();

    QPoly num_;
    QPoly den_;
    int shift_ = 0;
};

inline bool is_zero(const RatFuncQ& x) { return x.is_zero(); }

/// w_m(t) = prod_{i=1}^m (1 - t^i).
RatFuncQ w_factor(int m, const RatFuncQ& t);

}  // namespace qherm
