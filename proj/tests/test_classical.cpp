#include <doctest.h>

#include "qzeta/classical.hpp"
#include "qzeta/egf.hpp"
#include "support.hpp"

using namespace qzeta;
using testsupport::R;

namespace {

// Independent oracle: extract coefficients from the truncated series of the
// defining generating function. Each EGF is 1/denominator with
//   bernoulli:        denominator (e^t-1)/t,   coeff 1/(n+1)
//   euler:            denominator (e^t+1)/2,   coeff {1, 1/2, 1/2, ...}
//   frobenius(u):     denominator (e^t-u)/(1-u), coeff {1, 1/(1-u), ...}
RationalEgf bernoulli_series(long order) {
  RationalEgf d(order);
  for (long n = 0; n <= order; ++n) d.set_coeff(n, Rational(1, n + 1));
  return d.reciprocal();
}

RationalEgf euler_series(long order) {
  RationalEgf d(order);
  d.set_coeff(0, Rational(1));
  for (long n = 1; n <= order; ++n) d.set_coeff(n, Rational(1, 2));
  return d.reciprocal();
}

RationalEgf frobenius_series(long order, const Rational& u) {
  RationalEgf d(order);
  d.set_coeff(0, Rational(1));
  for (long n = 1; n <= order; ++n) d.set_coeff(n, Rational(1) / (Rational(1) - u));
  return d.reciprocal();
}

} // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == R("-1/2"));
  CHECK(bernoulli(12) == R("-691/2730"));
  CHECK(bernoulli(13).is_zero());
  CHECK_THROWS_AS(bernoulli(-1), DomainError);
}

TEST_CASE("euler numbers under the 2/(e^t+1) convention") {
  CHECK(euler_number(0) == Rational(1));
  CHECK(euler_number(1) == R("-1/2"));
  CHECK(euler_number(2).is_zero());
  CHECK(euler_number(3) == R("1/4"));
  CHECK(euler_number(4).is_zero());
}

TEST_CASE("frobenius-euler numbers") {
  CHECK(frobenius_euler(0, R("5/7")) == Rational(1));
  CHECK(frobenius_euler(1, Rational(-1)) == R("-1/2"));
  CHECK(frobenius_euler(1, Rational(3)) == R("1/2"));
  CHECK_THROWS_AS(frobenius_euler(2, Rational(1)), DomainError);

  // H_1(u) = 1/(u-1)
  testsupport::RationalGen gen;
  for (int i = 0; i < 10; ++i) {
    Rational u = gen.next();
    if (u == Rational(1)) u = Rational(2);
    CHECK(frobenius_euler(1, u) == Rational(1) / (u - Rational(1)));
  }
}

TEST_CASE("H_n(-1) equals E_n") {
  for (long n = 0; n <= 20; ++n)
    CHECK(frobenius_euler(n, Rational(-1)) == euler_number(n));
}

TEST_CASE("recurrences match the series oracle to order 20") {
  const long order = 20;
  const RationalEgf b = bernoulli_series(order);
  const RationalEgf e = euler_series(order);
  for (long n = 0; n <= order; ++n) {
    CHECK(bernoulli(n) == b.coeff(n));
    CHECK(euler_number(n) == e.coeff(n));
  }
  for (const char* us : {"1/3", "-1/2", "3"}) {
    const Rational u = R(us);
    const RationalEgf h = frobenius_series(order, u);
    for (long n = 0; n <= order; ++n)
      CHECK(frobenius_euler(n, u) == h.coeff(n));
  }
  // E_2 = E_4 = 0 by both methods
  CHECK(e.coeff(2).is_zero());
  CHECK(e.coeff(4).is_zero());
}

TEST_CASE("identity audit reports rather than asserts") {
  const auto rows = bernoulli_euler_identity_audit(5);
  REQUIRE(rows.size() == 6);

  CHECK(rows[0].lhs == Rational(1));
  CHECK(rows[0].rhs == Rational(1));
  CHECK(rows[0].equal);

  // the identity fails as printed at n = 1: -1/2 vs -1
  CHECK(rows[1].lhs == R("-1/2"));
  CHECK(rows[1].rhs == Rational(-1));
  CHECK_FALSE(rows[1].equal);

  CHECK(rows[2].lhs.is_zero());
  CHECK(rows[2].equal == (rows[2].lhs == rows[2].rhs));

  // every row's flag is consistent, and the rhs matches a direct recompute
  for (const auto& row : rows) {
    Rational rhs(0);
    for (long k = 0; k <= row.n; ++k)
      rhs += binomial(static_cast<unsigned long>(row.n + 1), static_cast<unsigned long>(k)) *
             Rational(2).pow_int(k) * bernoulli(k);
    CHECK(row.rhs == rhs);
    CHECK(row.equal == (row.lhs == row.rhs));
  }
}
