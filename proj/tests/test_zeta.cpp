#include <doctest.h>

#include "qzeta/classical.hpp"
#include "qzeta/qeuler.hpp"
#include "qzeta/zeta.hpp"
#include "support.hpp"

using namespace qzeta;
using testsupport::R;
using testsupport::ct_ctx;
using testsupport::ex_ctx;

namespace {

Complex s_of(long v) { return Complex::of(Rational(v), 64); }

Real diff_to(const Scalar& reference, const CertifiedValue& cv) {
  const Complex ref = to_complex(reference, cv.value.prec() + 64);
  return (cv.value - ref).abs_upper().to_prec(96, MPFR_RNDU);
}

// golden values frozen from 60-digit independent evaluations
const char* kGoldenHurwitzS2 = "1.199835690839234957311513477866171794023";
const char* kGoldenQ1R1 = "1.098639689931190462850238892992788291406";

} // namespace

TEST_CASE("hurwitz series: trivial and derived values") {
  const QContext ctx = ct_ctx("1/2", "1/3");

  // s = 0: plain geometric sum 1/(1-u) = 3/2
  const CertifiedValue at0 = zeta_q_hurwitz(s_of(0), Scalar(Rational(1)), ctx);
  CHECK(diff_to(Scalar(R("3/2")), at0) <= at0.tail_bound);

  // s = -1, x = 1: 9/5 by geometric sums
  const CertifiedValue atm1 = zeta_q_hurwitz(s_of(-1), Scalar(Rational(1)), ctx);
  CHECK(diff_to(Scalar(R("9/5")), atm1) <= atm1.tail_bound);

  // s = 2, x = 1: frozen golden value; default policy takes 40+ terms
  const CertifiedValue at2 = zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), ctx);
  CHECK(at2.terms_used >= 40);
  const Real golden = Real::parse(kGoldenHurwitzS2, 256);
  CHECK((at2.value.re() - golden).abs() <= at2.tail_bound);
  CHECK(at2.value.im().is_zero());

  // and at the documented 2e-4 tolerance
  const CertifiedValue loose = zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), ctx,
                                              TailPolicy::target(Real::parse("2e-4", 64)));
  CHECK(loose.tail_bound <= Real::parse("2e-4", 64));
  CHECK((loose.value.re() - golden).abs() <= loose.tail_bound);

  CHECK_THROWS_AS(zeta_q_hurwitz(s_of(2), Scalar(Rational(0)), ctx), DomainError);
  CHECK_THROWS_AS(zeta_q_hurwitz(s_of(2), Scalar(Rational(-1)), ctx), DomainError);
}

TEST_CASE("riemann form and the index shift") {
  const QContext ctx = ct_ctx("1/2", "1/3");
  const CertifiedValue vm1 = zeta_q_riemann(s_of(-1), ctx);
  CHECK(diff_to(Scalar(R("3/5")), vm1) <= vm1.tail_bound);

  const CertifiedValue v0 = zeta_q_riemann(s_of(0), ctx);
  CHECK(diff_to(Scalar(R("1/2")), v0) <= v0.tail_bound);

  // u = 0 collapses to the empty weight
  const QContext u0 = QContext::certified(Scalar(R("1/2")), Scalar(Rational(0)), 128);
  const CertifiedValue z = zeta_q_riemann(s_of(2), u0);
  CHECK(z.value.is_zero());
  CHECK(z.tail_bound.is_zero());
}

TEST_CASE("multiple zeta: regrouped series and special-value route") {
  const QContext ctx = ct_ctx("1/2", "1/3");

  // r = 1 coincides with the hurwitz form
  const CertifiedValue h = zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), ctx);
  const CertifiedValue m = zeta_q_multiple(s_of(2), Scalar(Rational(1)), 1, ctx);
  CHECK(h.value == m.value);

  // r = 2, s = -1, x = 1: 153/50 via geometric sums
  const CertifiedValue r2 = zeta_q_multiple(s_of(-1), Scalar(Rational(1)), 2, ctx);
  CHECK(diff_to(Scalar(R("153/50")), r2) <= r2.tail_bound);

  CHECK_THROWS_AS(zeta_q_multiple(s_of(1), Scalar(Rational(1)), 0, ctx), DomainError);
}

TEST_CASE("exact special values through the euler closed forms") {
  const QContext ctx = ex_ctx("1/2", "1/3");
  CHECK(as_rational(zeta_special_value(0, Scalar(Rational(1)), 1, ctx)) == R("3/2"));
  CHECK(as_rational(zeta_special_value(1, Scalar(Rational(1)), 1, ctx)) == R("9/5"));
  CHECK(as_rational(zeta_special_value(1, Scalar(Rational(1)), 2, ctx)) == R("153/50"));
}

TEST_CASE("interpolation at negative integers, module grid") {
  const TailPolicy pol = TailPolicy::target(Real::parse("1e-30", 64));
  for (const char* qs : {"1/2", "9/10"}) {
    for (const char* us : {"1/3", "-1/2"}) {
      const QContext ex = ex_ctx(qs, us);
      const QContext ct = ct_ctx(qs, us);
      for (long x = 1; x <= 2; ++x) {
        for (long n = 0; n <= 6; ++n) {
          const Scalar special = zeta_special_value(n, Scalar(Rational(x)), 1, ex);
          const CertifiedValue series =
              zeta_q_hurwitz(s_of(-n), Scalar(Rational(x)), ct, pol);
          CHECK(diff_to(special, series) <= series.tail_bound);
        }
      }
    }
  }
  // fractional x in certified mode: both sides approximate, the closed form
  // evaluated at higher precision so its own rounding is negligible
  const QContext ct = ct_ctx("1/2", "1/3");
  const QContext ct_hi = ct_ctx("1/2", "1/3", 192);
  for (long n = 0; n <= 6; ++n) {
    const Scalar special = zeta_special_value(n, Scalar(R("5/2")), 1, ct_hi);
    const CertifiedValue series = zeta_q_hurwitz(s_of(-n), Scalar(R("5/2")), ct, pol);
    CHECK(diff_to(special, series) <= series.tail_bound);
  }
}

TEST_CASE("r-ple interpolation for r in {2,3}") {
  const TailPolicy pol = TailPolicy::target(Real::parse("1e-30", 64));
  const QContext ex = ex_ctx("2/3", "1/3");
  const QContext ct = ct_ctx("2/3", "1/3");
  for (long r = 2; r <= 3; ++r)
    for (long x = 1; x <= 2; ++x)
      for (long n = 0; n <= 6; ++n) {
        const Scalar special = zeta_special_value(n, Scalar(Rational(x)), r, ex);
        const CertifiedValue series =
            zeta_q_multiple(s_of(-n), Scalar(Rational(x)), r, ct, pol);
        CHECK(diff_to(special, series) <= series.tail_bound);
      }
}

TEST_CASE("shift relation between the two zeta normalizations") {
  const QContext ctx = ct_ctx("1/2", "1/3");
  const TailPolicy pol = TailPolicy::target(Real::parse("1e-30", 64));

  for (long r = 1; r <= 2; ++r)
    for (long s = -3; s <= 3; ++s) {
      const ShiftCheck c = zeta_multiple_shift_check(s_of(s), r, ctx, pol);
      CHECK(c.within_bounds);
    }

  // the exact point: zeta_q(u|-1) = 3/5 = u * (1/(1-u)) H_{1,q}(u^-1, 1)
  const ShiftCheck c = zeta_multiple_shift_check(s_of(-1), 1, ctx, pol);
  CHECK(diff_to(Scalar(R("3/5")), c.lhs) <= c.lhs.tail_bound);
  CHECK(diff_to(Scalar(R("3/5")), c.rhs) <= c.rhs.tail_bound);
  const Rational exact_route =
      R("1/3") * as_rational(zeta_special_value(1, Scalar(Rational(1)), 1, ex_ctx("1/2", "1/3")));
  CHECK(exact_route == R("3/5"));
}

TEST_CASE("l-function: values, reductions, special values") {
  const auto chi4 = DirichletCharacter::quadratic_mod4();
  const auto chi3 = DirichletCharacter::quadratic_mod3();
  const auto chi1 = DirichletCharacter::principal(1);
  const QContext ctx = ct_ctx("1/2", "1/3");
  const QContext ex = ex_ctx("1/2", "1/3");

  // s = 0: sum chi(n) u^n = u/(1+u^2) = 3/10
  const CertifiedValue at0 = l_q(s_of(0), chi4, ctx);
  CHECK(diff_to(Scalar(R("3/10")), at0) <= at0.tail_bound);

  // principal mod 1 is the riemann form
  for (long s = -3; s <= 3; ++s) {
    const CertifiedValue a = l_q(s_of(s), chi1, ctx);
    const CertifiedValue b = zeta_q_riemann(s_of(s), ctx);
    const Real combined = Real::add(a.tail_bound.to_prec(96, MPFR_RNDU),
                                    b.tail_bound.to_prec(96, MPFR_RNDU), MPFR_RNDU);
    CHECK((a.value - b.value).abs_upper() <= combined);
  }

  // s = -1 brackets the exact special value (1/(1-u)) H_{1,chi,q} = 51/185
  const Scalar sv1 = l_q_special_value(1, chi4, ex);
  CHECK(as_rational(sv1) == R("51/185"));
  const CertifiedValue atm1 = l_q(s_of(-1), chi4, ctx);
  CHECK(diff_to(sv1, atm1) <= atm1.tail_bound);

  // special values: n = 0 identities including the zero-term convention
  CHECK(as_rational(l_q_special_value(0, chi4, ex)) == R("3/10"));
  CHECK(as_rational(l_q_special_value(1, chi1, ex)) == R("3/5"));
  CHECK(as_rational(l_q_special_value(0, chi1, ex)) == R("1/2"));
  const CertifiedValue principal0 = l_q(s_of(0), chi1, ctx);
  CHECK(diff_to(Scalar(R("1/2")), principal0) <= principal0.tail_bound);

  // full bracketing grid for both quadratic characters
  const TailPolicy pol = TailPolicy::target(Real::parse("1e-30", 64));
  for (const DirichletCharacter& chi : {chi3, chi4})
    for (long n = 0; n <= 8; ++n) {
      const Scalar sv = l_q_special_value(n, chi, ex);
      const CertifiedValue lv = l_q(s_of(-n), chi, ctx, pol);
      CHECK(diff_to(sv, lv) <= lv.tail_bound);
    }
}

TEST_CASE("q to 1 limit of the zeta series") {
  const QContext ctx = ct_ctx("1/2", "1/3"); // q ignored by the check
  const TailPolicy pol = TailPolicy::target(Real::parse("1e-30", 64));

  const LimitReport r1 =
      q_to_1_limit_check(s_of(2), Scalar(Rational(1)), 1, ctx, pol, 4, 12, 4);
  CHECK(r1.decay_ok);
  const Real golden = Real::parse(kGoldenQ1R1, 256);
  CHECK((r1.limit_value.value.re() - golden).abs() <= r1.limit_value.tail_bound);

  const LimitReport r2 =
      q_to_1_limit_check(s_of(2), Scalar(Rational(1)), 2, ctx, pol, 4, 12, 4);
  CHECK(r2.decay_ok);

  // u = 0: both sides are x^{-s} exactly, every deviation vanishes
  const QContext u0 = QContext::certified(Scalar(R("1/2")), Scalar(Rational(0)), 128);
  const LimitReport rz = q_to_1_limit_check(s_of(2), Scalar(Rational(4)), 1, u0, pol, 4, 8, 4);
  CHECK(rz.decay_ok);
  const Real expected = Real::of(R("1/16"), 256); // 4^-2
  CHECK((rz.limit_value.value.re() - expected).abs() <= rz.limit_value.tail_bound);
  for (const auto& pt : rz.points) CHECK(pt.deviation <= Real::pow2(-100, 64));
}

TEST_CASE("partial sums are monotone and stay inside the certificate") {
  // real positive parameters, integer s: every term is a positive rational,
  // so the partial sums can be compared exactly against value + bound
  const QContext ctx = ct_ctx("1/2", "1/3");
  const CertifiedValue cv = zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), ctx);
  const Rational ceiling = cv.value.re().to_rational() + cv.tail_bound.to_rational();

  const Rational q = R("1/2"), u = R("1/3");
  Rational partial(0), up(1), qp(q); // q^{m+1}
  Rational prev(-1);
  for (long m = 0; m < 60; ++m) {
    const Rational bracket = (Rational(1) - qp) / (Rational(1) - q);
    partial += up / bracket.pow_int(2);
    CHECK(partial > prev);
    CHECK(partial <= ceiling);
    prev = partial;
    up *= u;
    qp *= q;
  }
}

TEST_CASE("doubling the terms stays inside the previous certificate") {
  const QContext ctx = ct_ctx("2/3", "1/2");
  for (long s = -2; s <= 2; ++s) {
    const CertifiedValue once = zeta_q_hurwitz(s_of(s), Scalar(Rational(1)), ctx);
    const CertifiedValue twice = zeta_q_hurwitz(s_of(s), Scalar(Rational(1)), ctx,
                                                TailPolicy::terms(2 * once.terms_used));
    const Real combined = Real::add(once.tail_bound.to_prec(96, MPFR_RNDU),
                                    twice.tail_bound.to_prec(96, MPFR_RNDU), MPFR_RNDU);
    CHECK((once.value - twice.value).abs_upper() <= combined);
  }
}

TEST_CASE("term policies and failure modes") {
  const QContext ctx = ct_ctx("1/2", "1/3");
  const CertifiedValue fixed =
      zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), ctx, TailPolicy::terms(25));
  CHECK(fixed.terms_used == 25);
  CHECK(fixed.tail_bound.sgn() > 0);

  CHECK_THROWS_AS(zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), ctx,
                                 TailPolicy::target(Real::parse("1e-300", 64), 50)),
                  TruncationError);
  // an unreachable bound at this precision fails even with enough terms
  CHECK_THROWS_AS(zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), ctx,
                                 TailPolicy::target(Real::parse("1e-60", 64))),
                  TruncationError);
}

TEST_CASE("complex s and complex parameters are certified too") {
  const QContext ctx = ct_ctx("1/2", "1/3");
  const Complex s(Real::of(R("3/2"), 128), Real::of(R("1/2"), 128));
  const CertifiedValue v = zeta_q_hurwitz(s, Scalar(Rational(1)), ctx);
  CHECK(v.value.is_finite());
  CHECK_FALSE(v.value.im().is_zero());

  // complex q inside the disc
  const QContext cq =
      QContext::certified(Scalar(Complex::of(0.3, 0.2, 160)), Scalar(R("1/3")), 128);
  const CertifiedValue w = zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), cq);
  CHECK(w.value.is_finite());
  CHECK(w.tail_bound.sgn() > 0);

  // doubling check holds there as well
  const CertifiedValue w2 = zeta_q_hurwitz(s_of(2), Scalar(Rational(1)), cq,
                                           TailPolicy::terms(2 * w.terms_used));
  const Real combined = Real::add(w.tail_bound.to_prec(96, MPFR_RNDU),
                                  w2.tail_bound.to_prec(96, MPFR_RNDU), MPFR_RNDU);
  CHECK((w.value - w2.value).abs_upper() <= combined);
}
