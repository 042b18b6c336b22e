#pragma once

#include <string>
#include <string_view>

#include "qzeta/real.hpp"

namespace qzeta {

// Arbitrary-precision complex number carried as an (re, im) pair of Reals.
// Both parts share one precision; mixed-precision operands widen to the max.
// Powers, exp and log use the principal branch.
class Complex {
public:
  Complex() = default;
  Complex(Real re, Real im);
  explicit Complex(Real re);

  static Complex of(const Rational& re, mpfr_prec_t prec);
  static Complex of(const Rational& re, const Rational& im, mpfr_prec_t prec);
  static Complex of(double re, double im, mpfr_prec_t prec);
  static Complex zero(mpfr_prec_t prec);
  static Complex one(mpfr_prec_t prec);
  // "a", "a+bi", "a-bi", "bi", "i", "-i"; parts are decimal or rational strings
  static Complex parse(std::string_view s, mpfr_prec_t prec);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
  Complex to_prec(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  // true when the value is a real integer that fits in long
  bool is_small_int(long& out) const;

  Complex conj() const { return Complex(re_, -im_); }
  Complex scale(const Real& r) const { return Complex(re_ * r, im_ * r); }
  Real abs() const { return Real::hypot(re_, im_); }
  Real abs_upper() const; // rigorous upper bound on |z|
  Real abs_lower() const; // rigorous lower bound on |z|
  Real arg() const { return Real::atan2(im_, re_); }

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  Complex operator-() const { return Complex(-re_, -im_); }
  Complex& operator+=(const Complex& b) { *this = *this + b; return *this; }
  Complex& operator-=(const Complex& b) { *this = *this - b; return *this; }
  Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }
  Complex& operator/=(const Complex& b) { *this = *this / b; return *this; }

  Complex exp() const;
  Complex log() const;           // principal branch
  Complex pow_si(long e) const;  // binary powering
  Complex pow(const Complex& s) const; // exp(s log z); integer real s uses pow_si

  // bitwise equality of both parts
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  // single-cell form "1.5e0+2.5e-1i"; real values print without the i part
  std::string cell_str() const;

private:
  Real re_, im_;
};

} // namespace qzeta
