#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

using Integer = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("rational division by zero") {}
};

// Arbitrary-precision rational, always in canonical form: den > 0 and
// gcd(|num|, den) = 1. Equality of interval endpoints must be exact, so
// canonicalization happens on construction and after every operation.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  // Accepts "num/den", an integer literal, or a decimal literal
  // ("1.5" means exactly 3/2, never a binary float).
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const;
  Rational operator-() const { return Rational(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(::abs(v_)); }
  Rational reciprocal() const;
  Rational pow(unsigned long e) const;
  Integer floor() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // "num/den", or just "num" when den == 1.
  std::string to_string() const;

  // Round-half-even decimal string with exactly `digits` fractional digits.
  std::string to_decimal(int digits) const;

  double to_double() const { return v_.get_d(); }
  // Folds two double conversions so the full 64-bit mantissa is meaningful.
  long double to_long_double() const;

 private:
  explicit Rational(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator/(long a, const Rational& b) { return Rational(a) / b; }

// 3^e as an Integer; the ubiquitous base of the construction.
Integer pow3(unsigned long e);

// Natural log of a positive rational, stable for huge numerators and
// denominators (mantissa and exponent are split before taking logs).
long double log_value(const Rational& r);

}  // namespace cantor
