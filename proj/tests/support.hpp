#pragma once

#include <random>

#include "qzeta/context.hpp"

// shared shorthand for the test suites
namespace testsupport {

inline qzeta::Rational R(const char* s) { return qzeta::Rational::parse(s); }

inline qzeta::QContext ex_ctx(const char* q, const char* u, unsigned prec = 128) {
  return qzeta::QContext::exact(R(q), R(u), prec);
}

inline qzeta::QContext ct_ctx(const char* q, const char* u, unsigned prec = 128) {
  return qzeta::QContext::certified(qzeta::Scalar(R(q)), qzeta::Scalar(R(u)), prec);
}

// deterministic small rationals for property tests
class RationalGen {
public:
  explicit RationalGen(unsigned seed = 12345) : rng_(seed) {}
  qzeta::Rational next(long max_num = 20, long max_den = 20) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return qzeta::Rational(num(rng_), den(rng_));
  }
  // nonzero rational in (-1, 1)
  qzeta::Rational next_unit() {
    for (;;) {
      std::uniform_int_distribution<long> num(-9, 9);
      std::uniform_int_distribution<long> den(10, 23);
      const qzeta::Rational r(num(rng_), den(rng_));
      if (!r.is_zero()) return r;
    }
  }

private:
  std::mt19937_64 rng_;
};

} // namespace testsupport
