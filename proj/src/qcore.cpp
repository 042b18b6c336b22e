#include "qzeta/qcore.hpp"

namespace qzeta {

Rational q_bracket_exact(long x, const QContext& ctx) {
  if (x < 0) throw DomainError("q_bracket: x must be >= 0 in exact mode");
  const ExactQ& q = ctx.q_exact();
  const Rational qv = q.value();
  return (Rational(1) - qv.pow_int(x)) / (Rational(1) - qv);
}

Complex q_bracket_approx(const Complex& x, const Complex& q, const Complex& log_q) {
  const mpfr_prec_t p = std::max(x.prec(), q.prec());
  const Complex one = Complex::one(p);
  long xi = 0;
  const Complex qx = x.is_small_int(xi) ? q.pow_si(xi) : (x * log_q).exp();
  return (one - qx) / (one - q);
}

Scalar q_bracket(const Scalar& x, const QContext& ctx) {
  if (ctx.mode() == Mode::Exact) {
    const Rational& xr = as_rational(x);
    if (!xr.is_integer())
      throw DomainError("q_bracket: x must be an integer in exact mode");
    return q_bracket_exact(xr.to_long(), ctx);
  }
  const mpfr_prec_t wp = ctx.working_prec();
  const Complex q = ctx.q_complex(wp);
  return q_bracket_approx(to_complex(x, wp), q, q.log());
}

Rational geometric_sum(const Rational& a, const Rational& ratio) {
  if (ratio.abs() >= Rational(1))
    throw DomainError("geometric_sum: |ratio| must be < 1");
  return a / (Rational(1) - ratio);
}

Complex geometric_sum(const Complex& a, const Complex& ratio) {
  if (!(ratio.abs_upper() < Real::of(1L, 64)))
    throw DomainError("geometric_sum: |ratio| must be < 1");
  return a / (Complex::one(std::max(a.prec(), ratio.prec())) - ratio);
}

Rational tail_bound_geometric(const Rational& first, const Rational& ratio) {
  if (first.sign() < 0) throw DomainError("tail bound: first term magnitude must be >= 0");
  if (ratio.sign() < 0 || ratio >= Rational(1))
    throw DomainError("tail bound: need 0 <= ratio < 1");
  return first / (Rational(1) - ratio);
}

Real tail_bound_geometric(const Real& first, const Real& ratio) {
  const mpfr_prec_t p = std::max(first.prec(), ratio.prec());
  const Real one = Real::of(1L, p);
  if (first.sgn() < 0) throw DomainError("tail bound: first term magnitude must be >= 0");
  if (ratio.sgn() < 0 || ratio >= one)
    throw DomainError("tail bound: need 0 <= ratio < 1");
  // outward rounding keeps the bound rigorous
  const Real den = Real::sub(one, ratio, MPFR_RNDD);
  return Real::div(first, den, MPFR_RNDU);
}

} // namespace qzeta
