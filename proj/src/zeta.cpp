#include "qzeta/zeta.hpp"

#include "qzeta/detail/certify.hpp"
#include "qzeta/detail/fields.hpp"
#include "qzeta/detail/interval.hpp"
#include "qzeta/detail/qeuler_kernels.hpp"
#include "qzeta/qcore.hpp"

namespace qzeta {

using detail::IReal;
using detail::kBoundPrec;

namespace {

// One truncated series
//   prefactor * sum_{m >= m0} C(m-m0+r-1, r-1) chi(m) u^m base(m)^{-s},
// base(m) = [x+m]_q, or (x+m) for the q=1 comparison series. Summation is
// ascending and sequential; the tail bound is assembled separately from
// directed-rounding magnitudes of the original parameters.
struct ZSeries {
  mpfr_prec_t wp = 160;
  Complex s, neg_s;
  Complex x;
  long r = 1;
  long m0 = 0;
  const DirichletCharacter* chi = nullptr;
  std::vector<Complex> chiv;
  bool q_one_base = false;
  Complex q, u, logq, inv_one_minus_q;
  Complex prefactor;
};

// Enclosure of a real scalar from its exact form when available.
IReal scalar_interval(const Scalar& v, mpfr_prec_t prec) {
  if (is_exact(v)) {
    const Rational& r = std::get<Rational>(v);
    return IReal::of(Real::of(r, prec, MPFR_RNDD), Real::of(r, prec, MPFR_RNDU));
  }
  const Complex& c = std::get<Complex>(v);
  if (!c.is_real()) throw DomainError("expected a real scalar");
  return IReal::widen(c.re(), prec);
}

struct ZBound {
  Real au;                    // |u| upper
  Real chi_mag;               // sup |chi|
  long r = 1;
  long m0 = 0;
  // bracket base: flat factor bounding |base(m)^{-s}| over the whole range
  bool q_one = false;
  Real flat_base_bound;
  // q=1 base: data to bound the first omitted term and the term ratio
  IReal x_int{Real(), Real()};
  IReal neg_sigma{Real(), Real()};
  Real neg_sigma_pos_hi; // max(0, upper of -Re s)
};

Real inf_bound() {
  return Real::div(Real::of(1L, kBoundPrec), Real::zero(kBoundPrec), MPFR_RNDU);
}

// Flat bound on |[x+m]_q^{-s}| for all m >= m0, following the geometric
// sandwich [x+m0]_q <= [x+m]_q < 1/(1-q) for positive real parameters and
// the |1 - q^{x+m}| >= 1 - |q^{x+m0}| route for complex ones.
Real bracket_power_bound(const QContext& ctx, const ZSeries& zs, const Scalar& x_orig,
                         const IReal& sigma, const IReal& im_s) {
  const Real one = Real::of(1L, kBoundPrec);
  const Scalar q_orig = ctx.q_param();
  const bool q_pos_real =
      is_exact(q_orig) ||
      (std::get<Complex>(q_orig).is_real() && std::get<Complex>(q_orig).re().sgn() > 0);

  if (q_pos_real && zs.x.is_real()) {
    // q in (0,1): base interval [[x+m0], 1/(1-q))
    const IReal qi = scalar_interval(q_orig, kBoundPrec);
    const IReal xi = scalar_interval(x_orig, kBoundPrec);
    const IReal xm0 = xi + IReal::point(Real::of(zs.m0, kBoundPrec));
    if (!(xm0.lo.sgn() > 0)) throw DomainError("zeta bound needs Re(x) + start > 0");
    const IReal qx = (xm0 * qi.log()).exp(); // q^{x+m0}
    const Real num_lo = Real::sub(one, qx.hi, MPFR_RNDD);
    if (!(num_lo.sgn() > 0)) return inf_bound();
    const Real lb = Real::div(num_lo, Real::sub(one, qi.lo, MPFR_RNDU), MPFR_RNDD);
    const Real ub = Real::div(one, Real::sub(one, qi.hi, MPFR_RNDD), MPFR_RNDU);
    return IReal::pow_upper(IReal::of(lb, ub), sigma.neg());
  }

  // complex parameters: work from the stored values, inflated for storage
  // drift (the working representation differs from the true parameters by
  // at most a few ulps at wp bits, far below the 2^-40 margin).
  const Complex q = zs.q;
  const IReal aq = IReal::of(q.abs_lower().to_prec(kBoundPrec, MPFR_RNDD),
                             q.abs_upper().to_prec(kBoundPrec, MPFR_RNDU));
  if (!(aq.hi < one) || !(aq.lo.sgn() > 0))
    throw DomainError("zeta bound degenerates: need 0 < |q| < 1");
  const IReal rexm0 =
      IReal::widen(zs.x.re(), kBoundPrec) + IReal::point(Real::of(zs.m0, kBoundPrec));
  const IReal imx = IReal::widen(zs.x.im(), kBoundPrec);
  const IReal argq = IReal::widen(q.arg(), kBoundPrec);
  // |q^{x+m}| = |q|^{m+Re x} e^{-Im(x) arg q}, decreasing in m
  const IReal qx_mag = (rexm0 * aq.log() - imx * argq).exp();
  if (!(qx_mag.hi < one))
    throw DomainError("zeta bound degenerates: |q^{x+m0}| >= 1");
  const Complex one_minus_q = Complex::one(zs.wp) - q;
  const Real d_lo = one_minus_q.abs_lower().to_prec(kBoundPrec, MPFR_RNDD);
  const Real d_hi = one_minus_q.abs_upper().to_prec(kBoundPrec, MPFR_RNDU);
  if (!(d_lo.sgn() > 0)) throw DomainError("zeta bound degenerates: q too close to 1");
  const Real lb = Real::div(Real::sub(one, qx_mag.hi, MPFR_RNDD), d_hi, MPFR_RNDD);
  const Real ub = Real::div(Real::add(one, qx_mag.hi, MPFR_RNDU), d_lo, MPFR_RNDU);
  Real b = IReal::pow_upper(IReal::of(lb, ub), sigma.neg());
  // |base^{-s}| picks up e^{Im(s) arg(base)} <= e^{pi |Im s|} off the
  // positive real axis
  const Real ims_hi = Real::max(im_s.hi.abs(), im_s.lo.abs());
  if (ims_hi.sgn() > 0)
    b = Real::mul(b, Real::exp(Real::mul(ims_hi, Real::pi(kBoundPrec, MPFR_RNDU), MPFR_RNDU),
                               MPFR_RNDU),
                  MPFR_RNDU);
  const Real drift = Real::add(one, Real::pow2(-40, kBoundPrec), MPFR_RNDU);
  return Real::mul(b, drift, MPFR_RNDU);
}

// Rigorous truncation bound after M terms.
Real series_bound(const ZBound& b, long M) {
  const Real one = Real::of(1L, kBoundPrec);
  const Real coeff_ratio = Real::div(Real::of(M + b.r, kBoundPrec),
                                     Real::of(M + 1, kBoundPrec), MPFR_RNDU);
  Real first = Real::of(binomial_z(static_cast<unsigned long>(M + b.r - 1),
                                   static_cast<unsigned long>(b.r - 1)),
                        kBoundPrec, MPFR_RNDU);
  first = Real::mul(first, Real::pow_ui(b.au, static_cast<unsigned long>(b.m0 + M), MPFR_RNDU),
                    MPFR_RNDU);
  first = Real::mul(first, b.chi_mag, MPFR_RNDU);

  Real rho = Real::mul(coeff_ratio, b.au, MPFR_RNDU);
  if (!b.q_one) {
    first = Real::mul(first, b.flat_base_bound, MPFR_RNDU);
  } else {
    const IReal base_first = b.x_int + IReal::point(Real::of(b.m0 + M, kBoundPrec));
    if (!(base_first.lo.sgn() > 0)) return inf_bound();
    first = Real::mul(first, IReal::pow_upper(base_first, b.neg_sigma), MPFR_RNDU);
    if (b.neg_sigma_pos_hi.sgn() > 0) {
      // growing base powers: fold ((x+M+1)/(x+M))^{max(0,-sigma)} into rho
      const IReal base_next = b.x_int + IReal::point(Real::of(b.m0 + M + 1, kBoundPrec));
      const Real g_hi = base_next.div_pos(base_first).hi;
      const Real br = Real::exp(
          Real::mul(b.neg_sigma_pos_hi, Real::log(g_hi, MPFR_RNDU), MPFR_RNDU), MPFR_RNDU);
      rho = Real::mul(rho, br, MPFR_RNDU);
    }
  }
  if (!(rho < one)) return inf_bound();
  return tail_bound_geometric(first, rho);
}

Complex series_sum(const ZSeries& zs, long terms) {
  const Complex one = Complex::one(zs.wp);
  Complex up = zs.u.pow_si(zs.m0);
  Complex qp = zs.q_one_base
                   ? Complex::zero(zs.wp)
                   : ((zs.x + Complex::of(Rational(zs.m0), zs.wp)) * zs.logq).exp();
  mpz_class coeff(1);
  Complex acc = Complex::zero(zs.wp);
  for (long i = 0; i < terms; ++i) {
    const long m = zs.m0 + i;
    const bool skip = zs.chi != nullptr && zs.chi->value_is_zero(m);
    if (!skip) {
      const Complex base = zs.q_one_base ? zs.x + Complex::of(Rational(m), zs.wp)
                                         : (one - qp) * zs.inv_one_minus_q;
      if (base.is_zero() && !zs.neg_s.is_zero())
        throw DomainError("zeta series: base [x+m] vanished");
      Complex term = base.pow(zs.neg_s) * up;
      if (zs.r > 1) term = term.scale(Real::of(coeff, zs.wp));
      if (zs.chi != nullptr)
        term = term * zs.chiv[static_cast<std::size_t>(m % zs.chi->modulus())];
      acc += term;
    }
    if (i + 1 < terms) {
      up = up * zs.u;
      if (!zs.q_one_base) qp = qp * zs.q;
      if (zs.r > 1) {
        coeff *= i + zs.r;
        mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(i + 1));
      }
    }
  }
  return zs.prefactor * acc;
}

CertifiedValue evaluate(const QContext& ctx, const TailPolicy& policy, ZSeries& zs,
                        const Scalar& x_orig) {
  const IReal sigma = IReal::widen(zs.s.re(), kBoundPrec);
  const IReal im_s = IReal::widen(zs.s.im(), kBoundPrec);

  ZBound b;
  b.au = ctx.u_abs_upper(kBoundPrec);
  b.r = zs.r;
  b.m0 = zs.m0;
  b.q_one = zs.q_one_base;
  b.chi_mag = Real::of(1L, kBoundPrec);
  if (zs.chi != nullptr) {
    Real mag = Real::zero(kBoundPrec);
    for (const Complex& v : zs.chiv)
      mag = Real::max(mag, v.abs_upper().to_prec(kBoundPrec, MPFR_RNDU));
    b.chi_mag = mag;
  }
  if (zs.q_one_base) {
    b.x_int = scalar_interval(x_orig, kBoundPrec);
    if (!(b.x_int.lo.sgn() > 0) && zs.m0 == 0)
      throw DomainError("q=1 series needs Re(x) > 0");
    b.neg_sigma = sigma.neg();
    b.neg_sigma_pos_hi = Real::max(Real::zero(kBoundPrec), b.neg_sigma.hi);
  } else {
    b.flat_base_bound = bracket_power_bound(ctx, zs, x_orig, sigma, im_s);
  }

  // |prefactor| scales the truncation bound as well
  const Real pre_mag = zs.prefactor.abs_upper().to_prec(kBoundPrec, MPFR_RNDU);

  Real trunc = Real::zero(kBoundPrec);
  const long terms = detail::decide_terms(
      policy,
      [&](long M) { return Real::mul(series_bound(b, M), pre_mag, MPFR_RNDU); }, trunc);
  const Complex raw = series_sum(zs, terms);
  return detail::finalize_certified(raw, trunc, terms, policy, ctx.prec_bits());
}

ZSeries make_series(const Complex& s, const QContext& ctx) {
  ZSeries zs;
  zs.wp = ctx.working_prec();
  zs.s = s.to_prec(zs.wp);
  zs.neg_s = -zs.s;
  zs.q = ctx.q_complex(zs.wp);
  zs.u = ctx.u_complex(zs.wp);
  zs.logq = zs.q.log();
  zs.inv_one_minus_q = Complex::one(zs.wp) / (Complex::one(zs.wp) - zs.q);
  zs.x = Complex::zero(zs.wp);
  zs.prefactor = Complex::one(zs.wp);
  return zs;
}

void check_re_x_positive(const Scalar& x) {
  if (is_exact(x)) {
    if (std::get<Rational>(x).sign() <= 0) throw DomainError("zeta requires Re(x) > 0");
  } else if (!(std::get<Complex>(x).re().sgn() > 0)) {
    throw DomainError("zeta requires Re(x) > 0");
  }
}

} // namespace

CertifiedValue zeta_q_hurwitz(const Complex& s, const Scalar& x, const QContext& ctx,
                              const TailPolicy& policy) {
  return zeta_q_multiple(s, x, 1, ctx, policy);
}

CertifiedValue zeta_q_hurwitz(const Complex& s, const Scalar& x, const QContext& ctx) {
  return zeta_q_hurwitz(s, x, ctx, ctx.policy());
}

CertifiedValue zeta_q_multiple(const Complex& s, const Scalar& x, long r, const QContext& ctx,
                               const TailPolicy& policy) {
  if (r < 1) throw DomainError("zeta: r must be >= 1");
  check_re_x_positive(x);
  ZSeries zs = make_series(s, ctx);
  zs.r = r;
  zs.x = to_complex(x, zs.wp);
  return evaluate(ctx, policy, zs, x);
}

CertifiedValue zeta_q_multiple(const Complex& s, const Scalar& x, long r, const QContext& ctx) {
  return zeta_q_multiple(s, x, r, ctx, ctx.policy());
}

CertifiedValue zeta_q_riemann(const Complex& s, const QContext& ctx, const TailPolicy& policy) {
  ZSeries zs = make_series(s, ctx);
  zs.m0 = 1;
  return evaluate(ctx, policy, zs, Scalar(Rational(0)));
}

CertifiedValue zeta_q_riemann(const Complex& s, const QContext& ctx) {
  return zeta_q_riemann(s, ctx, ctx.policy());
}

CertifiedValue l_q(const Complex& s, const DirichletCharacter& chi, const QContext& ctx,
                   const TailPolicy& policy) {
  ZSeries zs = make_series(s, ctx);
  zs.m0 = 1;
  zs.chi = &chi;
  for (long a = 0; a < chi.modulus(); ++a)
    zs.chiv.push_back(to_complex(chi.value(a), zs.wp));
  return evaluate(ctx, policy, zs, Scalar(Rational(0)));
}

CertifiedValue l_q(const Complex& s, const DirichletCharacter& chi, const QContext& ctx) {
  return l_q(s, chi, ctx, ctx.policy());
}

Scalar zeta_special_value(long n, const Scalar& x, long r, const QContext& ctx) {
  if (n < 0) throw DomainError("special value: n must be >= 0");
  if (r < 1) throw DomainError("special value: r must be >= 1");
  if (ctx.mode() == Mode::Exact) {
    const detail::ExactField f(ctx);
    return detail::qe_higher(n, r, f.x_from_scalar(x), f) /
           (Rational(1) - f.u).pow_int(r);
  }
  const detail::ApproxField f(ctx);
  return detail::qe_higher(n, r, f.x_from_scalar(x), f) /
         (Complex::one(f.wp) - f.u).pow_si(r);
}

Scalar l_q_special_value(long n, const DirichletCharacter& chi, const QContext& ctx) {
  if (n < 0) throw DomainError("special value: n must be >= 0");
  if (ctx.mode() == Mode::Exact) {
    const detail::ExactField f(ctx);
    return detail::qe_generalized(n, chi, ZeroTerm::Exclude, f) / (Rational(1) - f.u);
  }
  const detail::ApproxField f(ctx);
  return detail::qe_generalized(n, chi, ZeroTerm::Exclude, f) / (Complex::one(f.wp) - f.u);
}

ShiftCheck zeta_multiple_shift_check(const Complex& s, long r, const QContext& ctx,
                                     const TailPolicy& policy) {
  if (r < 1) throw DomainError("shift check: r must be >= 1");
  ShiftCheck out;

  // defining route: u^r zeta_{r,q}(u|s,r), the prefactor folded into the
  // summation so its bound scales along
  {
    ZSeries zs = make_series(s, ctx);
    zs.r = r;
    zs.x = Complex::of(Rational(r), zs.wp);
    zs.prefactor = zs.u.pow_si(r);
    out.lhs = evaluate(ctx, policy, zs, Scalar(Rational(r)));
  }
  // index-shifted route: sum_{l >= r} C(l-1, r-1) u^l / [l]^s
  {
    ZSeries zs = make_series(s, ctx);
    zs.r = r;
    zs.m0 = r;
    out.rhs = evaluate(ctx, policy, zs, Scalar(Rational(0)));
  }
  out.delta = (out.lhs.value - out.rhs.value).abs_upper().to_prec(kBoundPrec, MPFR_RNDU);
  out.combined_bound = Real::add(out.lhs.tail_bound.to_prec(kBoundPrec, MPFR_RNDU),
                                 out.rhs.tail_bound.to_prec(kBoundPrec, MPFR_RNDU), MPFR_RNDU);
  out.within_bounds = out.delta <= out.combined_bound;
  return out;
}

LimitReport q_to_1_limit_check(const Complex& s, const Scalar& x, long r, const QContext& ctx,
                               const TailPolicy& policy, int k_lo, int k_hi,
                               int decay_exponent) {
  if (r < 1) throw DomainError("limit check: r must be >= 1");
  if (k_lo > k_hi) throw DomainError("limit check: empty k range");
  check_re_x_positive(x);

  LimitReport report;
  report.decay_exponent = decay_exponent;

  // q = 1 comparison series, same summer with the affine base
  {
    ZSeries zs = make_series(s, ctx);
    zs.r = r;
    zs.x = to_complex(x, zs.wp);
    zs.q_one_base = true;
    report.limit_value = evaluate(ctx, policy, zs, x);
  }

  for (int k = k_lo; k <= k_hi; ++k) {
    const Rational qk = Rational(1) - Rational(mpz_class(1), mpz_class(1) << k);
    const QContext ctx_k =
        QContext::certified(Scalar(qk), ctx.u_param(), ctx.prec_bits(), policy);
    LimitPoint pt;
    pt.k = k;
    pt.value = zeta_q_multiple(s, x, r, ctx_k, policy);
    pt.deviation =
        (pt.value.value - report.limit_value.value).abs_upper().to_prec(kBoundPrec, MPFR_RNDU);
    report.points.push_back(std::move(pt));
  }

  const Real& first = report.points.front().deviation;
  const Real& last = report.points.back().deviation;
  report.decay_ok =
      last.is_zero() ||
      first >= Real::mul(Real::pow2(decay_exponent, kBoundPrec), last, MPFR_RNDN);
  return report;
}

} // namespace qzeta
