#include "qzeta/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qzeta {

namespace {
mpfr_prec_t clamp_prec(mpfr_prec_t p) { return p < 2 ? 2 : p; }
} // namespace

Real Real::of(long v, mpfr_prec_t prec) {
  Real r(clamp_prec(prec));
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(double v, mpfr_prec_t prec) {
  Real r(clamp_prec(prec));
  mpfr_set_d(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::of(const mpz_class& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(clamp_prec(prec));
  mpfr_set_z(r.v_, v.get_mpz_t(), rnd);
  return r;
}

Real Real::of(const Rational& v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(clamp_prec(prec));
  mpfr_set_q(r.v_, v.raw().get_mpq_t(), rnd);
  return r;
}

Real Real::zero(mpfr_prec_t prec) {
  Real r(clamp_prec(prec));
  mpfr_set_zero(r.v_, 1);
  return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
  Real r(clamp_prec(prec));
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

Real Real::pi(mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(clamp_prec(prec));
  mpfr_const_pi(r.v_, rnd);
  return r;
}

Real Real::parse(std::string_view s, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(clamp_prec(prec));
  const std::string buf(s);
  char* end = nullptr;
  mpfr_strtofr(r.v_, buf.c_str(), &end, 10, rnd);
  if (end == buf.c_str() || *end != '\0')
    throw FormatError("not a real number: '" + buf + "'");
  return r;
}

Real Real::to_prec(mpfr_prec_t prec, mpfr_rnd_t rnd) const {
  Real r(clamp_prec(prec));
  mpfr_set(r.v_, v_, rnd);
  return r;
}

Rational Real::to_rational() const {
  if (!is_finite()) throw DomainError("real: non-finite value has no rational form");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return Rational(q);
}

Real Real::abs() const {
  Real r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN); // exact
  return r;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN); // exact
  return r;
}

namespace {
using Fn2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
Real bin_op(const Real& a, const Real& b, Fn2 fn, mpfr_rnd_t rnd) {
  Real r(std::max(a.prec(), b.prec()));
  fn(r.get(), a.get(), b.get(), rnd);
  return r;
}
} // namespace

Real Real::add(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin_op(a, b, mpfr_add, rnd); }
Real Real::sub(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin_op(a, b, mpfr_sub, rnd); }
Real Real::mul(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin_op(a, b, mpfr_mul, rnd); }
Real Real::div(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin_op(a, b, mpfr_div, rnd); }
Real Real::pow(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin_op(a, b, mpfr_pow, rnd); }
Real Real::atan2(const Real& y, const Real& x, mpfr_rnd_t rnd) { return bin_op(y, x, mpfr_atan2, rnd); }
Real Real::hypot(const Real& a, const Real& b, mpfr_rnd_t rnd) { return bin_op(a, b, mpfr_hypot, rnd); }

Real Real::pow_si(const Real& a, long e, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_pow_si(r.v_, a.v_, e, rnd);
  return r;
}

Real Real::pow_ui(const Real& a, unsigned long e, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_pow_ui(r.v_, a.v_, e, rnd);
  return r;
}

Real Real::sqrt(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_sqrt(r.v_, a.v_, rnd);
  return r;
}

Real Real::exp(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_exp(r.v_, a.v_, rnd);
  return r;
}

Real Real::log(const Real& a, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_log(r.v_, a.v_, rnd);
  return r;
}

Real Real::max(const Real& a, const Real& b) { return bin_op(a, b, mpfr_max, MPFR_RNDN); }
Real Real::min(const Real& a, const Real& b) { return bin_op(a, b, mpfr_min, MPFR_RNDN); }

void Real::sin_cos(Real& s, Real& c) const {
  s = Real(prec());
  c = Real(prec());
  mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
}

std::string Real::str() const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sgn() < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";

  // enough decimal digits to reconstruct the binary value exactly
  const std::size_t digits =
      static_cast<std::size_t>(std::ceil(static_cast<double>(prec()) * 0.30102999566398119)) + 2;
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);

  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();

  // mpfr_get_str semantics: value = 0.mant * 10^e
  std::string out = sign;
  out += mant.substr(0, 1);
  if (mant.size() > 1) {
    out += '.';
    out += mant.substr(1);
  }
  out += 'e';
  out += std::to_string(static_cast<long>(e) - 1);
  return out;
}

} // namespace qzeta
