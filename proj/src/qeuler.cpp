#include "qzeta/qeuler.hpp"

#include <exception>
#include <type_traits>

#include "qzeta/detail/certify.hpp"
#include "qzeta/detail/interval.hpp"
#include "qzeta/detail/qeuler_kernels.hpp"
#include "qzeta/egf.hpp"
#include "qzeta/qcore.hpp"

namespace qzeta {

using detail::ApproxField;
using detail::ExactField;

namespace {

void check_x_nonneg(const Scalar& x) {
  if (is_exact(x)) {
    if (std::get<Rational>(x).sign() < 0)
      throw DomainError("x must satisfy Re(x) >= 0");
  } else if (std::get<Complex>(x).re().sgn() < 0) {
    throw DomainError("x must satisfy Re(x) >= 0");
  }
}

} // namespace

Scalar q_euler_number(long n, const QContext& ctx) {
  if (ctx.mode() == Mode::Exact) return detail::qe_number(n, ExactField(ctx));
  return detail::qe_number(n, ApproxField(ctx));
}

Scalar q_euler_polynomial(long n, const Scalar& x, const QContext& ctx) {
  check_x_nonneg(x);
  if (ctx.mode() == Mode::Exact) {
    const ExactField f(ctx);
    return detail::qe_poly(n, f.x_from_scalar(x), f);
  }
  const ApproxField f(ctx);
  return detail::qe_poly(n, f.x_from_scalar(x), f);
}

Scalar q_euler_higher(long n, long r, const Scalar& x, const QContext& ctx) {
  check_x_nonneg(x);
  if (ctx.mode() == Mode::Exact) {
    const ExactField f(ctx);
    return detail::qe_higher(n, r, f.x_from_scalar(x), f);
  }
  const ApproxField f(ctx);
  return detail::qe_higher(n, r, f.x_from_scalar(x), f);
}

Scalar generalized_q_euler(long n, const DirichletCharacter& chi, const QContext& ctx,
                           ZeroTerm zero_term) {
  if (ctx.mode() == Mode::Exact)
    return detail::qe_generalized(n, chi, zero_term, ExactField(ctx));
  return detail::qe_generalized(n, chi, zero_term, ApproxField(ctx));
}

DistributionCheck distribution_relation_check(long n, const DirichletCharacter& chi,
                                              const QContext& ctx) {
  if (ctx.mode() != Mode::Exact)
    throw DomainError("distribution_relation_check runs in exact mode only");
  const ExactField f(ctx);
  const long d = chi.modulus();

  DistributionCheck out;
  out.lhs = detail::qe_generalized(n, chi, ZeroTerm::Include, f);

  // Right side lives at base q^d and twist u^d; carrying q as
  // (base, power*d) keeps the a/d exponents exactly representable.
  const ExactQ qd(f.q.base, f.q.power * static_cast<unsigned long>(d));
  const Rational ud = f.u.pow_int(d);
  const ExactField fd(qd, ud);

  Rational sum(0);
  for (long a = 0; a < d; ++a) {
    if (chi.value_is_zero(a)) continue;
    sum += as_rational(chi.value(a)) * f.u.pow_int(a) *
           detail::qe_poly(n, Rational(a, d), fd);
  }
  const Rational bracket_d = f.bracket(Rational(d));
  out.rhs = (Rational(1) - f.u) / (Rational(1) - ud) * bracket_d.pow_int(n) * sum;
  out.equal = out.lhs == out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// EGF coefficient oracle: direct truncated summation of
//   (1-u)^r sum_{m >= m0} C(m-m0+r-1, r-1) chi(m) u^m [x+m]^n .
// Blocked so the blocks can run in parallel; each block is summed
// sequentially and blocks combine in index order, which makes the result
// identical for Exec::Serial and Exec::Parallel.

OracleTarget OracleTarget::plain() { return OracleTarget{}; }

OracleTarget OracleTarget::poly(Scalar x) {
  OracleTarget t;
  t.kind = Kind::Poly;
  t.x = std::move(x);
  return t;
}

OracleTarget OracleTarget::higher(long r, Scalar x) {
  OracleTarget t;
  t.kind = Kind::Higher;
  t.r = r;
  t.x = std::move(x);
  return t;
}

OracleTarget OracleTarget::twisted(DirichletCharacter chi, ZeroTerm zero_term) {
  OracleTarget t;
  t.kind = Kind::Twisted;
  t.chi = std::move(chi);
  t.zero_term = zero_term;
  return t;
}

namespace {

constexpr long kBlockSize = 64;

struct OracleSeries {
  Complex q, u, logq, x;
  Complex inv_one_minus_q;
  Complex scale; // (1-u)^r
  long n = 0, r = 1, m0 = 0;
  const DirichletCharacter* chi = nullptr;
  std::vector<Complex> chiv;
  mpfr_prec_t wp = 128;
};

// Upper bound on |[x+m]_q| over the whole summation range. Real positive
// parameters use [x+m] < 1/(1-q); complex ones use
// |[x+m]| <= (1 + |q^{x+m0}|)/|1-q|, since |q^{x+m}| = |q|^{m+Re x} e^{-Im(x) arg(q)}
// decreases in m, evaluated with directed interval arithmetic on the
// stored parameter values and inflated by 2^-40 for storage drift.
Real bracket_upper(const OracleSeries& s, const QContext& ctx) {
  using detail::IReal;
  using detail::kBoundPrec;
  const Real one = Real::of(1L, kBoundPrec);
  if (ctx.params_real() && s.x.is_real() && s.x.re().sgn() >= 0) {
    const Real q_up = ctx.q_abs_upper(kBoundPrec);
    return Real::div(one, Real::sub(one, q_up, MPFR_RNDD), MPFR_RNDU);
  }
  const IReal aq = IReal::of(s.q.abs_lower().to_prec(kBoundPrec, MPFR_RNDD),
                             s.q.abs_upper().to_prec(kBoundPrec, MPFR_RNDU));
  if (!(aq.hi < one) || !(aq.lo.sgn() > 0))
    throw DomainError("oracle tail bound degenerates: need 0 < |q| < 1");
  const IReal log_abs_q = aq.log();
  const IReal rexm = IReal::widen(s.x.re(), kBoundPrec) + IReal::point(Real::of(s.m0, kBoundPrec));
  const IReal imx = IReal::widen(s.x.im(), kBoundPrec);
  const IReal arg_q = IReal::widen(s.q.arg(), kBoundPrec);
  // Re((x+m0) log q) = Re(x+m0) log|q| - Im(x) arg(q)
  const IReal expo = rexm * log_abs_q - imx * arg_q;
  const Real qx_up = expo.exp().hi; // |q^{x+m0}| upper
  const Complex one_minus_q = Complex::one(s.wp) - s.q;
  const Real den_low = one_minus_q.abs_lower().to_prec(kBoundPrec, MPFR_RNDD);
  if (!(den_low.sgn() > 0)) throw DomainError("oracle tail bound degenerates: q too close to 1");
  const Real drift = Real::add(one, Real::pow2(-40, kBoundPrec), MPFR_RNDU);
  return Real::mul(Real::div(Real::add(one, qx_up, MPFR_RNDU), den_low, MPFR_RNDU), drift,
                   MPFR_RNDU);
}

// Rigorous truncation bound after M terms: the first omitted term is
// dominated by |1-u|^r * C(M+r-1,r-1) |u|^{m0+M} * Ub^n, and successive
// term ratios stay below rho = (M+r)/(M+1) * |u|.
Real oracle_bound(const OracleSeries& s, const QContext& ctx, const Real& chi_mag,
                  const Real& ub, long M) {
  using detail::kBoundPrec;
  const Real au = ctx.u_abs_upper(kBoundPrec);
  const Real rho = Real::mul(Real::div(Real::of(M + s.r, kBoundPrec),
                                       Real::of(M + 1, kBoundPrec), MPFR_RNDU),
                             au, MPFR_RNDU);
  if (!(rho < Real::of(1L, kBoundPrec)))
    return Real::div(Real::of(1L, kBoundPrec), Real::zero(kBoundPrec), MPFR_RNDU); // +inf
  Real first = Real::of(binomial_z(static_cast<unsigned long>(M + s.r - 1),
                                   static_cast<unsigned long>(s.r - 1)),
                        kBoundPrec, MPFR_RNDU);
  first = Real::mul(first, Real::pow_ui(au, static_cast<unsigned long>(s.m0 + M), MPFR_RNDU),
                    MPFR_RNDU);
  first = Real::mul(first, Real::pow_ui(ub, static_cast<unsigned long>(s.n), MPFR_RNDU),
                    MPFR_RNDU);
  first = Real::mul(first, chi_mag, MPFR_RNDU);
  // |1-u|^r <= (1+|u|)^r
  const Real scale_up = Real::pow_ui(Real::add(Real::of(1L, kBoundPrec), au, MPFR_RNDU),
                                     static_cast<unsigned long>(s.r), MPFR_RNDU);
  return Real::mul(scale_up, tail_bound_geometric(first, rho), MPFR_RNDU);
}

Complex oracle_sum(const OracleSeries& s, long terms, Exec exec) {
  const long nblocks = (terms + kBlockSize - 1) / kBlockSize;
  std::vector<Complex> partial(static_cast<std::size_t>(nblocks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nblocks));

  const bool parallel = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long b = 0; b < nblocks; ++b) {
    try {
      const long lo = s.m0 + b * kBlockSize;
      const long hi = std::min(s.m0 + terms, lo + kBlockSize);
      Complex up = s.u.pow_si(lo);
      Complex qp = ((s.x + Complex::of(Rational(lo), s.wp)) * s.logq).exp(); // q^{x+lo}
      mpz_class coeff = binomial_z(static_cast<unsigned long>(lo - s.m0 + s.r - 1),
                                   static_cast<unsigned long>(s.r - 1));
      Complex acc = Complex::zero(s.wp);
      for (long m = lo; m < hi; ++m) {
        const bool skip = s.chi != nullptr && s.chi->value_is_zero(m);
        if (!skip) {
          const Complex bracket = (Complex::one(s.wp) - qp) * s.inv_one_minus_q;
          Complex term = bracket.pow_si(s.n) * up;
          if (s.r > 1) term = term.scale(Real::of(coeff, s.wp));
          if (s.chi != nullptr)
            term = term * s.chiv[static_cast<std::size_t>(m % s.chi->modulus())];
          acc += term;
        }
        if (m + 1 < hi) {
          up = up * s.u;
          qp = qp * s.q;
          if (s.r > 1) {
            const long N = m - s.m0;
            coeff *= N + s.r;
            mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(),
                            static_cast<unsigned long>(N + 1));
          }
        }
      }
      partial[static_cast<std::size_t>(b)] = acc;
    } catch (...) {
      errors[static_cast<std::size_t>(b)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Complex total = Complex::zero(s.wp);
  for (const Complex& p : partial) total += p; // fixed order
  return total;
}

} // namespace

CertifiedValue egf_oracle_coefficient(const OracleTarget& target, long n, const QContext& ctx,
                                      const TailPolicy& policy, Exec exec) {
  if (n < 0) throw DomainError("oracle: n must be >= 0");
  if (target.kind != OracleTarget::Kind::Plain && target.kind != OracleTarget::Kind::Twisted)
    check_x_nonneg(target.x);

  OracleSeries s;
  s.wp = ctx.working_prec();
  s.q = ctx.q_complex(s.wp);
  s.u = ctx.u_complex(s.wp);
  s.logq = s.q.log();
  s.inv_one_minus_q = Complex::one(s.wp) / (Complex::one(s.wp) - s.q);
  s.n = n;
  Real chi_mag = Real::of(1L, detail::kBoundPrec);
  switch (target.kind) {
    case OracleTarget::Kind::Plain:
      s.x = Complex::zero(s.wp);
      break;
    case OracleTarget::Kind::Poly:
      s.x = to_complex(target.x, s.wp);
      break;
    case OracleTarget::Kind::Higher:
      if (target.r < 1) throw DomainError("oracle: r must be >= 1");
      s.r = target.r;
      s.x = to_complex(target.x, s.wp);
      break;
    case OracleTarget::Kind::Twisted: {
      if (!target.chi) throw DomainError("oracle: twisted target needs a character");
      s.chi = &*target.chi;
      s.x = Complex::zero(s.wp);
      s.m0 = target.zero_term == ZeroTerm::Include ? 0 : 1;
      Real mag = Real::zero(detail::kBoundPrec);
      for (long a = 0; a < s.chi->modulus(); ++a) {
        s.chiv.push_back(to_complex(s.chi->value(a), s.wp));
        mag = Real::max(mag, s.chiv.back().abs_upper().to_prec(detail::kBoundPrec, MPFR_RNDU));
      }
      chi_mag = mag;
      break;
    }
  }
  s.scale = (Complex::one(s.wp) - s.u).pow_si(s.r);

  const Real ub = bracket_upper(s, ctx);
  Real trunc_bound = Real::zero(detail::kBoundPrec);
  const long terms = detail::decide_terms(
      policy, [&](long M) { return oracle_bound(s, ctx, chi_mag, ub, M); }, trunc_bound);

  const Complex raw = s.scale * oracle_sum(s, terms, exec);
  return detail::finalize_certified(raw, trunc_bound, terms, policy, ctx.prec_bits());
}

CertifiedValue egf_oracle_coefficient(const OracleTarget& target, long n, const QContext& ctx) {
  return egf_oracle_coefficient(target, n, ctx, ctx.policy());
}

// ---------------------------------------------------------------------------
// Functional-equation check at the series-coefficient level. The base
// coefficients come from the alternating expansion
//   F(t) = (1-u) e^{t/(1-q)} sum_j (-(1-q)^{-1})^j (1-u q^j)^{-1} t^j/j!,
// a route independent of the closed forms, assembled with the generic
// EgfSeries machinery; the comparison side is the binomial convolution.

namespace {

template <class F>
std::vector<CoefficientCheckRow> functional_check_impl(long n_max, const typename F::X& x,
                                                       const F& f, mpfr_prec_t tol_prec) {
  using S = typename F::S;
  const S one = f.one();
  const S zero = one - one;

  EgfSeries<S> alt(n_max, zero);
  const S c = one / (one - f.q_value());
  S cj = one, ql = one;
  for (long j = 0; j <= n_max; ++j) {
    const S den = one - f.u_value() * ql;
    if (F::is_zero(den)) throw DomainError("functional check: 1 - u q^j vanished");
    S coeff = (one - f.u_value()) * cj / den;
    if (j % 2 == 1) coeff = zero - coeff;
    alt.set_coeff(j, coeff);
    if (j < n_max) {
      cj = cj * c;
      ql = ql * f.q_value();
    }
  }
  const EgfSeries<S> base = EgfSeries<S>::exp_ct(c, n_max).mul(alt); // H_{n,q}(u^-1)

  const S qx = f.qpow_x(x);
  const S bx = f.bracket(x);
  const EgfSeries<S> lhs = EgfSeries<S>::exp_ct(bx, n_max).mul(base.scale_arg(qx));

  std::vector<CoefficientCheckRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max + 1));
  for (long n = 0; n <= n_max; ++n) {
    CoefficientCheckRow row;
    row.n = n;
    const S l = lhs.coeff(n);
    const S r = detail::qe_poly(n, x, f);
    row.lhs = Scalar(l);
    row.rhs = Scalar(r);
    if constexpr (std::is_same_v<S, Rational>) {
      (void)tol_prec;
      row.equal = l == r;
    } else {
      const Real tol = Real::mul(Real::pow2(-static_cast<long>(tol_prec / 2), 64),
                                 Real::add(Real::of(1L, 64), l.abs_upper().to_prec(64, MPFR_RNDU),
                                           MPFR_RNDU),
                                 MPFR_RNDU);
      row.equal = (l - r).abs_upper() <= tol;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

std::vector<CoefficientCheckRow> egf_functional_equation_check(long n_max, const Scalar& x,
                                                               const QContext& ctx) {
  if (n_max < 0) throw DomainError("functional check: n_max must be >= 0");
  check_x_nonneg(x);
  if (ctx.mode() == Mode::Exact) {
    const ExactField f(ctx);
    return functional_check_impl(n_max, f.x_from_scalar(x), f, ctx.prec_bits());
  }
  const ApproxField f(ctx);
  return functional_check_impl(n_max, f.x_from_scalar(x), f, ctx.prec_bits());
}

} // namespace qzeta
