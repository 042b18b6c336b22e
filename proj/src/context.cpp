#include "qzeta/context.hpp"

namespace qzeta {

ExactQ::ExactQ(Rational b, unsigned long p) : base(std::move(b)), power(p) {
  if (power == 0) throw DomainError("q power must be positive");
  if (base.sign() <= 0 || base >= Rational(1))
    throw DomainError("q must satisfy 0<q<1 in exact mode");
}

Rational ExactQ::pow(const Rational& x) const {
  const Rational e = x * Rational(static_cast<long>(power));
  if (!e.is_integer())
    throw NonRepresentableError("q^x is not rational for exponent " + x.str() +
                                " (simplify exponents against the q carrier first)");
  if (!e.fits_long()) throw DomainError("q exponent out of range: " + e.str());
  return base.pow_int(e.to_long());
}

Rational qpow_exact(const Rational& q, const Rational& x) {
  if (q.sign() <= 0 || q >= Rational(1))
    throw DomainError("q must satisfy 0<q<1 in exact mode");
  return ExactQ(q).pow(x);
}

TailPolicy TailPolicy::target(Real bound, long cap) {
  if (!(bound > Real::zero(bound.prec())))
    throw DomainError("tail policy: target bound must be positive");
  if (cap <= 0) throw DomainError("tail policy: term cap must be positive");
  TailPolicy p;
  p.target_bound = std::move(bound);
  p.term_cap = cap;
  return p;
}

TailPolicy TailPolicy::terms(long n) {
  if (n <= 0) throw DomainError("tail policy: fixed term count must be positive");
  TailPolicy p;
  p.fixed_terms = n;
  return p;
}

TailPolicy TailPolicy::default_for(unsigned prec_bits) {
  return target(Real::pow2(-static_cast<long>(prec_bits / 2), 64));
}

namespace {

void check_u(const Rational& u) {
  if (u.abs() >= Rational(1)) throw DomainError("u must satisfy |u|<1");
}

unsigned check_prec(unsigned prec_bits) {
  if (prec_bits < 53) throw DomainError("precision must be at least 53 bits");
  return prec_bits;
}

} // namespace

QContext QContext::exact(ExactQ q, Rational u, unsigned prec_bits,
                         std::optional<TailPolicy> policy) {
  check_u(u);
  QContext c;
  c.mode_ = Mode::Exact;
  c.prec_bits_ = check_prec(prec_bits);
  c.policy_ = policy ? *policy : TailPolicy::default_for(prec_bits);
  c.q_exact_ = std::move(q);
  c.u_exact_ = std::move(u);
  return c;
}

QContext QContext::exact(Rational q, Rational u, unsigned prec_bits,
                         std::optional<TailPolicy> policy) {
  return exact(ExactQ(std::move(q)), std::move(u), prec_bits, std::move(policy));
}

QContext QContext::certified(Scalar q, Scalar u, unsigned prec_bits,
                             std::optional<TailPolicy> policy) {
  QContext c;
  c.mode_ = Mode::Certified;
  c.prec_bits_ = check_prec(prec_bits);
  c.policy_ = policy ? *policy : TailPolicy::default_for(prec_bits);
  if (is_exact(q)) {
    const Rational& qr = std::get<Rational>(q);
    // rational q keeps the exact-mode domain so bounds stay clean
    c.q_exact_ = ExactQ(qr);
  } else {
    const Complex& qc = std::get<Complex>(q);
    if (qc.is_zero()) throw DomainError("q must be nonzero");
    if (!(qc.abs_upper() < Real::of(1L, 64)))
      throw DomainError("q must satisfy |q|<1");
    c.q_approx_ = qc;
  }
  if (is_exact(u)) {
    check_u(std::get<Rational>(u));
    c.u_exact_ = std::get<Rational>(u);
  } else {
    const Complex& uc = std::get<Complex>(u);
    if (!(uc.abs_upper() < Real::of(1L, 64)))
      throw DomainError("u must satisfy |u|<1");
    c.u_approx_ = uc;
  }
  return c;
}

const ExactQ& QContext::q_exact() const {
  if (!q_exact_) throw DomainError("exact q unavailable (complex parameter)");
  return *q_exact_;
}

const Rational& QContext::u_exact() const {
  if (!u_exact_) throw DomainError("exact u unavailable (complex parameter)");
  return *u_exact_;
}

Complex QContext::q_complex(mpfr_prec_t prec) const {
  if (q_exact_) {
    const Real b = Real::of(q_exact_->base, prec);
    return Complex(Real::pow_ui(b, q_exact_->power, MPFR_RNDN), Real::zero(prec));
  }
  return q_approx_->to_prec(prec);
}

Complex QContext::u_complex(mpfr_prec_t prec) const {
  if (u_exact_) return Complex::of(*u_exact_, prec);
  return u_approx_->to_prec(prec);
}

bool QContext::params_real() const {
  const bool q_real = q_exact_ || q_approx_->is_real();
  const bool u_real = u_exact_ || u_approx_->is_real();
  return q_real && u_real;
}

Real QContext::q_abs_upper(mpfr_prec_t prec) const {
  if (q_exact_) {
    // base^power rounded up; base positive
    const Real b = Real::of(q_exact_->base, prec, MPFR_RNDU);
    return Real::pow_ui(b, q_exact_->power, MPFR_RNDU);
  }
  return q_approx_->abs_upper().to_prec(prec, MPFR_RNDU);
}

Real QContext::u_abs_upper(mpfr_prec_t prec) const {
  if (u_exact_) return Real::of(u_exact_->abs(), prec, MPFR_RNDU);
  return u_approx_->abs_upper().to_prec(prec, MPFR_RNDU);
}

Scalar QContext::q_param() const {
  if (q_exact_) return q_exact_->value();
  return *q_approx_;
}

Scalar QContext::u_param() const {
  if (u_exact_) return *u_exact_;
  return *u_approx_;
}

QContext QContext::with_mode(Mode m) const {
  QContext c = *this;
  c.mode_ = m;
  return c;
}

QContext QContext::with_policy(TailPolicy p) const {
  QContext c = *this;
  c.policy_ = std::move(p);
  return c;
}

QContext QContext::with_prec(unsigned prec_bits) const {
  QContext c = *this;
  c.prec_bits_ = check_prec(prec_bits);
  return c;
}

} // namespace qzeta
