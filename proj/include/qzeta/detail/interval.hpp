#pragma once

#include "qzeta/real.hpp"

namespace qzeta::detail {

// Minimal directed-rounding interval, used only inside tail-bound
// computations when parameters are complex (real-parameter bounds take the
// simpler monotone paths). lo <= true value <= hi always.
struct IReal {
  Real lo, hi;

  static IReal point(const Real& r) { return {r, r}; }
  static IReal of(Real l, Real h) { return {std::move(l), std::move(h)}; }
  // encloses r after a precision change
  static IReal widen(const Real& r, mpfr_prec_t prec) {
    return {r.to_prec(prec, MPFR_RNDD), r.to_prec(prec, MPFR_RNDU)};
  }

  IReal operator+(const IReal& o) const {
    return {Real::add(lo, o.lo, MPFR_RNDD), Real::add(hi, o.hi, MPFR_RNDU)};
  }
  IReal operator-(const IReal& o) const {
    return {Real::sub(lo, o.hi, MPFR_RNDD), Real::sub(hi, o.lo, MPFR_RNDU)};
  }
  IReal operator*(const IReal& o) const {
    const Real a = Real::mul(lo, o.lo, MPFR_RNDD), b = Real::mul(lo, o.hi, MPFR_RNDD);
    const Real c = Real::mul(hi, o.lo, MPFR_RNDD), d = Real::mul(hi, o.hi, MPFR_RNDD);
    const Real au = Real::mul(lo, o.lo, MPFR_RNDU), bu = Real::mul(lo, o.hi, MPFR_RNDU);
    const Real cu = Real::mul(hi, o.lo, MPFR_RNDU), du = Real::mul(hi, o.hi, MPFR_RNDU);
    return {Real::min(Real::min(a, b), Real::min(c, d)),
            Real::max(Real::max(au, bu), Real::max(cu, du))};
  }
  IReal neg() const { return {-hi, -lo}; }
  // requires a positive denominator interval
  IReal div_pos(const IReal& o) const {
    if (!(o.lo.sgn() > 0)) throw DomainError("interval division needs a positive denominator");
    const Real a = Real::div(lo, o.lo, MPFR_RNDD), b = Real::div(lo, o.hi, MPFR_RNDD);
    const Real c = Real::div(hi, o.lo, MPFR_RNDD), d = Real::div(hi, o.hi, MPFR_RNDD);
    const Real au = Real::div(lo, o.lo, MPFR_RNDU), bu = Real::div(lo, o.hi, MPFR_RNDU);
    const Real cu = Real::div(hi, o.lo, MPFR_RNDU), du = Real::div(hi, o.hi, MPFR_RNDU);
    return {Real::min(Real::min(a, b), Real::min(c, d)),
            Real::max(Real::max(au, bu), Real::max(cu, du))};
  }
  IReal exp() const { return {Real::exp(lo, MPFR_RNDD), Real::exp(hi, MPFR_RNDU)}; }
  IReal log() const { // requires lo > 0
    if (!(lo.sgn() > 0)) throw DomainError("interval log needs a positive lower bound");
    return {Real::log(lo, MPFR_RNDD), Real::log(hi, MPFR_RNDU)};
  }
  // upper bound on base^expo over the intervals; requires a positive base
  static Real pow_upper(const IReal& base, const IReal& expo) {
    return (expo * base.log()).exp().hi;
  }
};

} // namespace qzeta::detail
