#pragma once

#include <optional>
#include <vector>

#include "qzeta/character.hpp"
#include "qzeta/context.hpp"

namespace qzeta {

// Series evaluators for the q-deformed zeta family. For |u| < 1 every one
// of these series converges geometrically for all complex s, so evaluation
// is plain summation with a certified tail; no integral representation or
// continuation machinery is involved. Summation runs at precision_bits + 32
// guard bits, ascending index, sequentially within a query.

// zeta_q(u|s,x) = sum_{m>=0} u^m / [m+x]_q^s, Re(x) > 0.
CertifiedValue zeta_q_hurwitz(const Complex& s, const Scalar& x, const QContext& ctx,
                              const TailPolicy& policy);
CertifiedValue zeta_q_hurwitz(const Complex& s, const Scalar& x, const QContext& ctx);

// zeta_q(u|s) = sum_{l>=1} u^l / [l]_q^s.
CertifiedValue zeta_q_riemann(const Complex& s, const QContext& ctx, const TailPolicy& policy);
CertifiedValue zeta_q_riemann(const Complex& s, const QContext& ctx);

// r-fold form, regrouped to a single index with composition counts:
// zeta_{r,q}(u|s,x) = sum_{N>=0} C(N+r-1, r-1) u^N / [x+N]_q^s, Re(x) > 0.
CertifiedValue zeta_q_multiple(const Complex& s, const Scalar& x, long r, const QContext& ctx,
                               const TailPolicy& policy);
CertifiedValue zeta_q_multiple(const Complex& s, const Scalar& x, long r, const QContext& ctx);

// l_q(s,chi) = sum_{n>=1} chi(n) u^n / [n]_q^s.
CertifiedValue l_q(const Complex& s, const DirichletCharacter& chi, const QContext& ctx,
                   const TailPolicy& policy);
CertifiedValue l_q(const Complex& s, const DirichletCharacter& chi, const QContext& ctx);

// Exact special value at s = -n: zeta_{r,q}(u|-n,x) = (1-u)^{-r} H^{(r)}_{n,q}(u^-1,x).
// No truncation; exact in exact mode.
Scalar zeta_special_value(long n, const Scalar& x, long r, const QContext& ctx);

// l_q(-n,chi) = (1-u)^{-1} H_{n,chi,q}(u^-1), with the twisted number taken
// on m >= 1 support so the identity holds at n = 0 as well.
Scalar l_q_special_value(long n, const DirichletCharacter& chi, const QContext& ctx);

struct ShiftCheck {
  CertifiedValue lhs;     // u^r * zeta_{r,q}(u|s,r)    (the defining route)
  CertifiedValue rhs;     // sum_{l>=r} C(l-1,r-1) u^l / [l]^s  (index-shifted route)
  Real delta;             // |lhs.value - rhs.value|
  Real combined_bound;    // lhs.tail_bound + rhs.tail_bound
  bool within_bounds = false;
};

// Evaluates zeta_{r,q}(u|s) two independent ways and compares.
ShiftCheck zeta_multiple_shift_check(const Complex& s, long r, const QContext& ctx,
                                     const TailPolicy& policy);

struct LimitPoint {
  int k = 0;              // q_k = 1 - 2^-k
  CertifiedValue value;
  Real deviation;         // |value - q=1 series value|
};

struct LimitReport {
  CertifiedValue limit_value; // the q=1 series sum C(N+r-1,r-1) u^N/(x+N)^s
  std::vector<LimitPoint> points;
  bool decay_ok = false;  // first deviation >= 2^decay_exponent * last deviation
  int decay_exponent = 4;
};

// Evaluates zeta_{r,q_k}(u|s,x) along q_k = 1 - 2^-k, k in [k_lo, k_hi],
// against the q=1 series computed by the same summer, and reports the
// deviation decay. u and precision come from ctx; q in ctx is ignored.
LimitReport q_to_1_limit_check(const Complex& s, const Scalar& x, long r, const QContext& ctx,
                               const TailPolicy& policy, int k_lo = 4, int k_hi = 12,
                               int decay_exponent = 4);

} // namespace qzeta
