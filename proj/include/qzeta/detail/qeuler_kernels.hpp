#pragma once

#include <vector>

#include "qzeta/character.hpp"
#include "qzeta/detail/fields.hpp"

namespace qzeta::detail {

// q-Euler number H_{n,q}(u^-1) by the finite alternating-binomial sum
//   (1-u)/(1-q)^n * sum_{l=0..n} C(n,l)(-1)^l / (1 - u q^l).
template <class F>
typename F::S qe_number(long n, const F& f) {
  if (n < 0) throw DomainError("q_euler_number: n must be >= 0");
  using S = typename F::S;
  const S one = f.one();
  S acc = one - one;
  S ql = one;
  for (long l = 0; l <= n; ++l) {
    const S den = one - f.u_value() * ql;
    if (F::is_zero(den)) throw DomainError("q_euler: 1 - u q^l vanished");
    S term = f.from_rational(binomial(static_cast<unsigned long>(n),
                                      static_cast<unsigned long>(l))) / den;
    acc = (l % 2 == 0) ? acc + term : acc - term;
    if (l < n) ql = ql * f.q_value();
  }
  return (one - f.u_value()) * acc / F::pow_i(one - f.q_value(), n);
}

// H_{n,q}(u^-1, x) by the binomial convolution (the authoritative form)
//   sum_{l=0..n} C(n,l) [x]^{n-l} (q^x)^l H_{l,q}(u^-1).
template <class F>
typename F::S qe_poly(long n, const typename F::X& x, const F& f) {
  if (n < 0) throw DomainError("q_euler_polynomial: n must be >= 0");
  using S = typename F::S;
  const S bx = f.bracket(x);
  const S qx = f.qpow_x(x);
  S acc = f.one() - f.one();
  S qxl = f.one();
  for (long l = 0; l <= n; ++l) {
    acc = acc + f.from_rational(binomial(static_cast<unsigned long>(n),
                                         static_cast<unsigned long>(l))) *
                    F::pow_i(bx, n - l) * qxl * qe_number(l, f);
    if (l < n) qxl = qxl * qx;
  }
  return acc;
}

// Order-r polynomial H^{(r)}_{n,q}(u^-1, x):
//   (1-u)^r/(1-q)^n * sum_{l=0..n} C(n,l)(-1)^l (q^x)^l (1 - u q^l)^{-r},
// obtained by expanding [x+m]^n binomially and geometric-summing each of
// the r indices.
template <class F>
typename F::S qe_higher(long n, long r, const typename F::X& x, const F& f) {
  if (n < 0) throw DomainError("q_euler_higher: n must be >= 0");
  if (r < 1) throw DomainError("q_euler_higher: r must be >= 1");
  using S = typename F::S;
  const S one = f.one();
  const S qx = f.qpow_x(x);
  S acc = one - one;
  S ql = one, qxl = one;
  for (long l = 0; l <= n; ++l) {
    const S den = one - f.u_value() * ql;
    if (F::is_zero(den)) throw DomainError("q_euler: 1 - u q^l vanished");
    S term = f.from_rational(binomial(static_cast<unsigned long>(n),
                                      static_cast<unsigned long>(l))) *
             qxl / F::pow_i(den, r);
    acc = (l % 2 == 0) ? acc + term : acc - term;
    if (l < n) {
      ql = ql * f.q_value();
      qxl = qxl * qx;
    }
  }
  return F::pow_i(one - f.u_value(), r) * acc / F::pow_i(one - f.q_value(), n);
}

// Same polynomial by the r=1 closed form (denominator (1-q)^n, which the
// binomial expansion of [x+m]^n forces; one often sees (1-q^n) misprinted
// here). Kept as an independent route to cross-check the convolution.
template <class F>
typename F::S qe_poly_direct(long n, const typename F::X& x, const F& f) {
  return qe_higher(n, 1, x, f);
}

// Character-twisted number H_{n,chi,q}(u^-1): split the defining sum by
// residue class mod d and geometric-sum each class:
//   (1-u)/(1-q)^n * sum_l C(n,l)(-1)^l
//       sum_{a<d} chi(a) u^a q^{la} / (1 - u^d q^{ld}),
// where the a=0 class contributes 1/(1-u^d q^{ld}) with the zero term
// included and u^d q^{ld}/(1-u^d q^{ld}) without it.
template <class F>
typename F::S qe_generalized(long n, const DirichletCharacter& chi, ZeroTerm zero_term,
                             const F& f) {
  if (n < 0) throw DomainError("generalized_q_euler: n must be >= 0");
  using S = typename F::S;
  const long d = chi.modulus();
  const S one = f.one();
  const S ud = F::pow_i(f.u_value(), d);

  std::vector<S> chiv, ua;
  chiv.reserve(static_cast<std::size_t>(d));
  ua.reserve(static_cast<std::size_t>(d));
  for (long a = 0; a < d; ++a) {
    chiv.push_back(chi.value_is_zero(a) ? one - one : f.from_scalar(chi.value(a)));
    ua.push_back(F::pow_i(f.u_value(), a));
  }

  S acc = one - one;
  S ql = one;
  for (long l = 0; l <= n; ++l) {
    const S qld = F::pow_i(ql, d);
    const S den = one - ud * qld;
    if (F::is_zero(den)) throw DomainError("generalized_q_euler: 1 - u^d q^{ld} vanished");
    S inner = one - one;
    for (long a = 0; a < d; ++a) {
      if (chi.value_is_zero(a)) continue;
      const S num = a == 0 ? (zero_term == ZeroTerm::Include ? one : ud * qld)
                           : ua[static_cast<std::size_t>(a)] * F::pow_i(ql, a);
      inner = inner + chiv[static_cast<std::size_t>(a)] * num / den;
    }
    S term = f.from_rational(binomial(static_cast<unsigned long>(n),
                                      static_cast<unsigned long>(l))) *
             inner;
    acc = (l % 2 == 0) ? acc + term : acc - term;
    if (l < n) ql = ql * f.q_value();
  }
  return (one - f.u_value()) * acc / F::pow_i(one - f.q_value(), n);
}

} // namespace qzeta::detail
