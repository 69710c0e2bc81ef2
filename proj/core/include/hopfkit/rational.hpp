#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hopfkit {

// Exact rational number. Always stored canonically: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

    // Parses "n" or "n/d" with optional leading '-'.
    static Rational parse(const std::string& text);

    static Rational factorial(unsigned n);
    static Rational binomial(unsigned n, unsigned k);

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool negative() const { return value_ < 0; }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
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

    Rational abs() const { return negative() ? -*this : *this; }
    Rational pow(int e) const;

    // "n" or "n/d".
    std::string str() const { return value_.get_str(); }

  private:
    mpq_class value_;
};

}  // namespace hopfkit
