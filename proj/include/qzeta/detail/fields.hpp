#pragma once

#include "qzeta/context.hpp"

namespace qzeta::detail {

// The closed-form evaluators are written once, generically over a small
// field interface, and instantiated for exact rational and certified
// complex arithmetic. X is the type of polynomial arguments x; q-powers
// q^x go through the field so the exact instantiation can use the ExactQ
// carrier and the approximate one the principal branch.

struct ExactField {
  using S = Rational;
  using X = Rational;

  ExactQ q;
  Rational u;
  Rational qv;

  explicit ExactField(const QContext& ctx)
      : q(ctx.q_exact()), u(ctx.u_exact()), qv(q.value()) {}
  ExactField(ExactQ q_, Rational u_) : q(std::move(q_)), u(std::move(u_)), qv(q.value()) {}

  S from_rational(const Rational& r) const { return r; }
  S from_scalar(const Scalar& s) const { return as_rational(s); }
  S one() const { return Rational(1); }
  const S& q_value() const { return qv; }
  const S& u_value() const { return u; }
  S qpow_x(const X& x) const { return q.pow(x); }
  S bracket(const X& x) const { return (Rational(1) - q.pow(x)) / (Rational(1) - qv); }
  static S pow_i(const S& b, long e) { return b.pow_int(e); }
  static bool is_zero(const S& v) { return v.is_zero(); }
  X x_from_scalar(const Scalar& x) const { return as_rational(x); }
};

struct ApproxField {
  using S = Complex;
  using X = Complex;

  Complex q, u, logq;
  mpfr_prec_t wp;

  explicit ApproxField(const QContext& ctx)
      : q(ctx.q_complex(ctx.working_prec())),
        u(ctx.u_complex(ctx.working_prec())),
        logq(q.log()),
        wp(ctx.working_prec()) {}

  S from_rational(const Rational& r) const { return Complex::of(r, wp); }
  S from_scalar(const Scalar& s) const { return to_complex(s, wp); }
  S one() const { return Complex::one(wp); }
  const S& q_value() const { return q; }
  const S& u_value() const { return u; }
  S qpow_x(const X& x) const {
    long e = 0;
    if (x.is_small_int(e)) return q.pow_si(e);
    return (x * logq).exp();
  }
  S bracket(const X& x) const { return (one() - qpow_x(x)) / (one() - q); }
  static S pow_i(const S& b, long e) { return b.pow_si(e); }
  static bool is_zero(const S& v) { return v.is_zero(); }
  X x_from_scalar(const Scalar& x) const { return to_complex(x, wp); }
};

} // namespace qzeta::detail
