#include "qzeta/complex.hpp"

#include <algorithm>

namespace qzeta {

namespace {
// widen both parts to a common precision so arithmetic never narrows
Real at(const Real& r, mpfr_prec_t p) { return r.prec() == p ? r : r.to_prec(p); }
} // namespace

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const mpfr_prec_t p = std::max(re_.prec(), im_.prec());
  if (re_.prec() != p) re_ = re_.to_prec(p);
  if (im_.prec() != p) im_ = im_.to_prec(p);
}

Complex::Complex(Real re) : Complex(std::move(re), Real::zero(2)) {}

Complex Complex::of(const Rational& re, mpfr_prec_t prec) {
  return Complex(Real::of(re, prec), Real::zero(prec));
}

Complex Complex::of(const Rational& re, const Rational& im, mpfr_prec_t prec) {
  return Complex(Real::of(re, prec), Real::of(im, prec));
}

Complex Complex::of(double re, double im, mpfr_prec_t prec) {
  return Complex(Real::of(re, prec), Real::of(im, prec));
}

Complex Complex::zero(mpfr_prec_t prec) {
  return Complex(Real::zero(prec), Real::zero(prec));
}

Complex Complex::one(mpfr_prec_t prec) {
  return Complex(Real::of(1L, prec), Real::zero(prec));
}

Complex Complex::to_prec(mpfr_prec_t prec, mpfr_rnd_t rnd) const {
  return Complex(re_.to_prec(prec, rnd), im_.to_prec(prec, rnd));
}

bool Complex::is_small_int(long& out) const {
  if (!im_.is_zero() || !re_.is_finite()) return false;
  if (mpfr_integer_p(re_.get()) == 0) return false;
  if (mpfr_fits_slong_p(re_.get(), MPFR_RNDN) == 0) return false;
  out = mpfr_get_si(re_.get(), MPFR_RNDN);
  return true;
}

Real Complex::abs_upper() const {
  const mpfr_prec_t p = prec();
  const Real r2 = Real::mul(re_, re_, MPFR_RNDU);
  const Real i2 = Real::mul(im_, im_, MPFR_RNDU);
  return Real::sqrt(Real::add(r2, i2, MPFR_RNDU), MPFR_RNDU).to_prec(p, MPFR_RNDU);
}

Real Complex::abs_lower() const {
  const mpfr_prec_t p = prec();
  const Real r2 = Real::mul(re_, re_, MPFR_RNDD);
  const Real i2 = Real::mul(im_, im_, MPFR_RNDD);
  return Real::sqrt(Real::add(r2, i2, MPFR_RNDD), MPFR_RNDD).to_prec(p, MPFR_RNDD);
}

Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re_ + b.re_, a.im_ + b.im_);
}

Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re_ - b.re_, a.im_ - b.im_);
}

Complex operator*(const Complex& a, const Complex& b) {
  // fast path for real operands (the common case on the default grids)
  if (a.im_.is_zero() && b.im_.is_zero())
    return Complex(a.re_ * b.re_, Real::zero(std::max(a.prec(), b.prec())));
  return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.is_zero()) throw DomainError("complex: division by zero");
  const mpfr_prec_t p = std::max(a.prec(), b.prec());
  if (a.im_.is_zero() && b.im_.is_zero())
    return Complex(a.re_ / b.re_, Real::zero(p));
  const Real den = at(b.re_, p) * at(b.re_, p) + at(b.im_, p) * at(b.im_, p);
  const Real re = (a.re_ * b.re_ + a.im_ * b.im_) / den;
  const Real im = (a.im_ * b.re_ - a.re_ * b.im_) / den;
  return Complex(re, im);
}

Complex Complex::exp() const {
  const mpfr_prec_t p = prec();
  const Real ea = Real::exp(at(re_, p));
  if (im_.is_zero()) return Complex(ea, Real::zero(p));
  Real s, c;
  at(im_, p).sin_cos(s, c);
  return Complex(ea * c, ea * s);
}

Complex Complex::log() const {
  if (is_zero()) throw DomainError("complex: log of zero");
  const mpfr_prec_t p = prec();
  if (im_.is_zero() && re_.sgn() > 0)
    return Complex(Real::log(at(re_, p)), Real::zero(p));
  return Complex(Real::log(abs().to_prec(p)), arg().to_prec(p));
}

Complex Complex::pow_si(long e) const {
  const mpfr_prec_t p = prec();
  if (e == 0) return one(p);
  if (is_zero()) {
    if (e < 0) throw DomainError("complex: 0 raised to a negative power");
    return zero(p);
  }
  // real base stays in real arithmetic (mpfr_pow_si handles negatives exactly)
  if (im_.is_zero()) return Complex(Real::pow_si(at(re_, p), e, MPFR_RNDN), Real::zero(p));
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
  Complex base = *this, acc = one(p);
  while (n != 0) {
    if (n & 1ul) acc *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  if (e < 0) acc = one(p) / acc;
  return acc;
}

Complex Complex::pow(const Complex& s) const {
  long e = 0;
  if (s.is_small_int(e)) return pow_si(e);
  return (log() * s).exp();
}

std::string Complex::cell_str() const {
  if (im_.is_zero()) return re_.str();
  const std::string im_abs = im_.abs().str();
  return re_.str() + (im_.sgn() < 0 ? "-" : "+") + im_abs + "i";
}

Complex Complex::parse(std::string_view s, mpfr_prec_t prec) {
  if (s.empty()) throw FormatError("empty complex number");
  auto part = [prec](std::string_view t) {
    // accept rationals in components as well ("1/3+1/2i")
    if (t.find('/') != std::string_view::npos)
      return Real::of(Rational::parse(t), prec);
    return Real::parse(t, prec);
  };
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
      split = i; // keep the last such sign: "1e-3-2i" splits before "2i"
  }
  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) {
    if (split != std::string_view::npos)
      throw FormatError("not a complex number: '" + std::string(s) + "'");
    return Complex(part(s), Real::zero(prec));
  }
  std::string_view re_part, im_part;
  if (split == std::string_view::npos) {
    re_part = "0";
    im_part = s.substr(0, s.size() - 1);
  } else {
    re_part = s.substr(0, split);
    im_part = s.substr(split, s.size() - split - 1);
  }
  if (im_part.empty() || im_part == "+" || im_part == "-")
    im_part = im_part == "-" ? "-1" : "1";
  return Complex(part(re_part), part(im_part));
}

} // namespace qzeta
