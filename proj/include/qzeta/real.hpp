#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "qzeta/rational.hpp"

namespace qzeta {

// Arbitrary-precision binary float (MPFR-backed, RAII). The precision of a
// binary operation's result is the max of the operand precisions, so
// precision is never silently reduced. Default rounding is to-nearest;
// the static helpers take an explicit rounding mode for the certified
// bound computations, which round outward.
class Real {
public:
  static constexpr mpfr_prec_t kMinPrec = 53;

  Real() : Real(kMinPrec) {}
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec < 2 ? 2 : prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(long v, mpfr_prec_t prec);
  static Real of(double v, mpfr_prec_t prec);
  static Real of(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real of(const Rational& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real zero(mpfr_prec_t prec);
  static Real pow2(long e, mpfr_prec_t prec); // exact 2^e
  static Real pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
  // Decimal/scientific string at the given precision. Throws FormatError.
  static Real parse(std::string_view s, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real to_prec(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) const;

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rational to_rational() const; // exact value of this binary float

  Real abs() const;      // exact
  Real operator-() const; // exact

  // Explicit-rounding helpers; result precision is max of operand precisions.
  static Real add(const Real& a, const Real& b, mpfr_rnd_t rnd);
  static Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd);
  static Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd);
  static Real div(const Real& a, const Real& b, mpfr_rnd_t rnd);
  static Real pow(const Real& a, const Real& b, mpfr_rnd_t rnd);
  static Real pow_si(const Real& a, long e, mpfr_rnd_t rnd);
  static Real pow_ui(const Real& a, unsigned long e, mpfr_rnd_t rnd);
  static Real sqrt(const Real& a, mpfr_rnd_t rnd);
  static Real exp(const Real& a, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real log(const Real& a, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real atan2(const Real& y, const Real& x, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real hypot(const Real& a, const Real& b, mpfr_rnd_t rnd = MPFR_RNDN);
  static Real max(const Real& a, const Real& b);
  static Real min(const Real& a, const Real& b);
  void sin_cos(Real& s, Real& c) const; // both at this precision, RNDN

  friend Real operator+(const Real& a, const Real& b) { return add(a, b, MPFR_RNDN); }
  friend Real operator-(const Real& a, const Real& b) { return sub(a, b, MPFR_RNDN); }
  friend Real operator*(const Real& a, const Real& b) { return mul(a, b, MPFR_RNDN); }
  friend Real operator/(const Real& a, const Real& b) { return div(a, b, MPFR_RNDN); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  // Deterministic scientific form, e.g. "1.5e0", "-2.25e-3", "0"; round-trips
  // exactly through parse() at the same precision.
  std::string str() const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

private:
  mpfr_t v_;
};

} // namespace qzeta
