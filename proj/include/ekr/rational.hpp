#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ekr {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.  Arithmetic never rounds; division by zero throws
/// std::domain_error instead of producing a value.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long value) : v_(static_cast<long>(value)) {}
    Rational(int value) : v_(value) {}
    Rational(long long num, long long den);
    Rational(const Integer& value) : v_(value) {}
    Rational(const Integer& num, const Integer& den);

    /// Parses "p/q" or "p" (lowest terms not required on input).
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    /// "p/q" in lowest terms, or "p" when the denominator is 1.
    std::string str() const;

    /// Inexact; for display and test oracles only.
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_; // canonical form maintained by every constructor and operator
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ekr
