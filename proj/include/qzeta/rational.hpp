#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "qzeta/errors.hpp"

namespace qzeta {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Arithmetic is exact and closed; division by zero throws.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  // Accepts "p/q", integers, and decimal strings ("1.25e-3" parses as the
  // exact power-of-ten rational 1/800). Throws FormatError otherwise.
  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool fits_long() const;
  long to_long() const; // requires is_integer() && fits_long()
  double to_double() const { return v_.get_d(); }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  // Exact integer power; negative exponents require a nonzero base.
  Rational pow_int(long e) const;

  std::string str() const { return v_.get_str(); } // "p/q", or "p" when den==1

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
  Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
  Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

private:
  mpq_class v_; // canonical: lowest terms, positive denominator
};

// C(n, k) as an exact rational (integer-valued).
Rational binomial(unsigned long n, unsigned long k);
mpz_class binomial_z(unsigned long n, unsigned long k);

} // namespace qzeta
