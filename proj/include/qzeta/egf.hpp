#pragma once

#include <vector>

#include "qzeta/complex.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

template <class S>
struct ScalarOps {
  static S from_rational(const Rational& r, const S&) { return r; }
  static S zero(const S&) { return S(0); }
};

template <>
struct ScalarOps<Complex> {
  static Complex from_rational(const Rational& r, const Complex& proto) {
    return Complex::of(r, proto.prec());
  }
  static Complex zero(const Complex& proto) { return Complex::zero(proto.prec()); }
};

// Truncated exponential generating function: coeffs[n] is the coefficient of
// t^n/n!. Operations on mismatched orders truncate to the minimum order.
// Exact when instantiated over Rational.
template <class S>
class EgfSeries {
public:
  explicit EgfSeries(long order, S proto = S{})
      : proto_(std::move(proto)),
        c_(static_cast<std::size_t>(order + 1), ScalarOps<S>::zero(proto_)) {
    if (order < 0) throw DomainError("egf: order must be >= 0");
  }

  long order() const { return static_cast<long>(c_.size()) - 1; }
  const S& coeff(long n) const { return c_.at(static_cast<std::size_t>(n)); }
  void set_coeff(long n, S v) { c_.at(static_cast<std::size_t>(n)) = std::move(v); }

  // series of e^{c t}: coefficient n is c^n
  static EgfSeries exp_ct(const S& c, long order) {
    EgfSeries s(order, c);
    S p = ScalarOps<S>::from_rational(Rational(1), c);
    for (long n = 0; n <= order; ++n) {
      s.c_[static_cast<std::size_t>(n)] = p;
      if (n < order) p = p * c;
    }
    return s;
  }

  EgfSeries add(const EgfSeries& o) const {
    EgfSeries out(std::min(order(), o.order()), proto_);
    for (long n = 0; n <= out.order(); ++n)
      out.c_[static_cast<std::size_t>(n)] = coeff(n) + o.coeff(n);
    return out;
  }

  // Cauchy product with binomial weights: (a*b)_n = sum_k C(n,k) a_k b_{n-k}
  EgfSeries mul(const EgfSeries& o) const {
    EgfSeries out(std::min(order(), o.order()), proto_);
    for (long n = 0; n <= out.order(); ++n) {
      S acc = ScalarOps<S>::zero(proto_);
      for (long k = 0; k <= n; ++k) {
        const S w = ScalarOps<S>::from_rational(
            binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), proto_);
        acc = acc + w * coeff(k) * o.coeff(n - k);
      }
      out.c_[static_cast<std::size_t>(n)] = acc;
    }
    return out;
  }

  EgfSeries scale(const S& v) const {
    EgfSeries out = *this;
    for (auto& c : out.c_) c = c * v;
    return out;
  }

  // substitute t -> c t: coefficient n picks up c^n
  EgfSeries scale_arg(const S& c) const {
    EgfSeries out = *this;
    S p = ScalarOps<S>::from_rational(Rational(1), proto_);
    for (long n = 0; n <= order(); ++n) {
      out.c_[static_cast<std::size_t>(n)] = out.c_[static_cast<std::size_t>(n)] * p;
      if (n < order()) p = p * c;
    }
    return out;
  }

  // multiply by e^{c t}
  EgfSeries mul_exp(const S& c) const { return mul(exp_ct(c, order())); }

  // multiplicative inverse; requires an invertible constant term
  EgfSeries reciprocal() const {
    EgfSeries out(order(), proto_);
    const S one = ScalarOps<S>::from_rational(Rational(1), proto_);
    out.c_[0] = one / c_[0];
    for (long n = 1; n <= order(); ++n) {
      S acc = ScalarOps<S>::zero(proto_);
      for (long k = 0; k < n; ++k) {
        const S w = ScalarOps<S>::from_rational(
            binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), proto_);
        acc = acc + w * out.coeff(k) * coeff(n - k);
      }
      out.c_[static_cast<std::size_t>(n)] = -(acc / c_[0]);
    }
    return out;
  }

private:
  S proto_;
  std::vector<S> c_;
};

using RationalEgf = EgfSeries<Rational>;

} // namespace qzeta
