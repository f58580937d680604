#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schroeder {

/// Arbitrary-precision signed integer (GMP-backed).
using Integer = mpz_class;

/// Thrown by Rational division and by negative powers of zero.
struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("rational division by zero") {}
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is canonically 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Exact integer value; throws std::domain_error unless denominator is 1.
    Integer to_integer() const;

    /// Nearest double (GMP rounding); may overflow to +/-inf for huge values.
    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// Integer power; exp may be negative (throws DivisionByZero on 0^-k).
    /// 0^0 is 1 (empty product).
    Rational pow(long exp) const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Parses "p" or "p/q" (optional leading '-'). Rejects zero denominators
    /// and malformed text with std::invalid_argument / DivisionByZero.
    static Rational parse(std::string_view text);

private:
    mpq_class value_;  // invariant: canonical (lowest terms, positive denominator)
};

/// C(n, k) as an exact integer; 0 when k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

/// Natural log of a positive rational that may far exceed double range.
/// Computed as log(num) - log(den) from each operand's top bits and bit length.
double log_rational(const Rational& q);

}  // namespace schroeder
