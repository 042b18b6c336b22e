#include <doctest.h>

#include "qzeta/egf.hpp"
#include "support.hpp"

using namespace qzeta;
using testsupport::R;

namespace {

RationalEgf random_series(testsupport::RationalGen& gen, long order) {
  RationalEgf s(order);
  for (long n = 0; n <= order; ++n) s.set_coeff(n, gen.next());
  return s;
}

} // namespace

TEST_CASE("cauchy product is commutative and associative") {
  testsupport::RationalGen gen(777);
  for (int trial = 0; trial < 8; ++trial) {
    const RationalEgf a = random_series(gen, 10);
    const RationalEgf b = random_series(gen, 10);
    const RationalEgf c = random_series(gen, 10);
    const RationalEgf ab = a.mul(b), ba = b.mul(a);
    const RationalEgf abc1 = ab.mul(c), abc2 = a.mul(b.mul(c));
    for (long n = 0; n <= 10; ++n) {
      CHECK(ab.coeff(n) == ba.coeff(n));
      CHECK(abc1.coeff(n) == abc2.coeff(n));
    }
  }
}

TEST_CASE("exponentials multiply by adding rates") {
  const RationalEgf ea = RationalEgf::exp_ct(R("2/3"), 12);
  const RationalEgf eb = RationalEgf::exp_ct(R("-1/4"), 12);
  const RationalEgf eab = RationalEgf::exp_ct(R("2/3") + R("-1/4"), 12);
  const RationalEgf prod = ea.mul(eb);
  for (long n = 0; n <= 12; ++n) CHECK(prod.coeff(n) == eab.coeff(n));
}

TEST_CASE("reciprocal inverts to the delta series") {
  testsupport::RationalGen gen(31);
  RationalEgf a = random_series(gen, 9);
  a.set_coeff(0, R("3/2")); // keep it invertible
  const RationalEgf inv = a.reciprocal();
  const RationalEgf id = a.mul(inv);
  CHECK(id.coeff(0) == Rational(1));
  for (long n = 1; n <= 9; ++n) CHECK(id.coeff(n).is_zero());
}

TEST_CASE("argument scaling and truncation to the smaller order") {
  const RationalEgf e = RationalEgf::exp_ct(Rational(1), 8);
  const RationalEgf e2 = e.scale_arg(Rational(2)); // e^{2t}
  for (long n = 0; n <= 8; ++n) CHECK(e2.coeff(n) == Rational(2).pow_int(n));

  const RationalEgf small = RationalEgf::exp_ct(Rational(1), 3);
  CHECK(e.mul(small).order() == 3);
  CHECK(e.add(small).order() == 3);
}
