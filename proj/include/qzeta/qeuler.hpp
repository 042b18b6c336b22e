#pragma once

#include <optional>
#include <vector>

#include "qzeta/character.hpp"
#include "qzeta/context.hpp"

namespace qzeta {

// q-Euler (Frobenius-Euler) number H_{n,q}(u^-1). Exact in exact mode.
Scalar q_euler_number(long n, const QContext& ctx);

// q-Euler polynomial H_{n,q}(u^-1, x) via the binomial convolution.
// Requires Re(x) >= 0. Exact mode needs q^x representable (integer x, or a
// rational x pre-simplified against the context's q carrier).
Scalar q_euler_polynomial(long n, const Scalar& x, const QContext& ctx);

// Order-r (Barnes-type) polynomial H^{(r)}_{n,q}(u^-1, x); r >= 1.
Scalar q_euler_higher(long n, long r, const Scalar& x, const QContext& ctx);

// Character-twisted number H_{n,chi,q}(u^-1). The zero_term flag selects
// whether the defining sum starts at index 0 (default) or 1; the two agree
// except for the modulus-1 character at n = 0.
Scalar generalized_q_euler(long n, const DirichletCharacter& chi, const QContext& ctx,
                           ZeroTerm zero_term = ZeroTerm::Include);

struct DistributionCheck {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// Exact both-sides evaluation of the distribution relation
//   H_{n,chi,q}(u^-1) = (1-u)/(1-u^d) [d]_q^n
//                       sum_{a<d} chi(a) u^a H_{n,q^d}(u^-d, a/d).
// Exact mode only; the right side runs in the derived context with q
// carried as (base q, power d) so the a/d exponents stay exact.
DistributionCheck distribution_relation_check(long n, const DirichletCharacter& chi,
                                              const QContext& ctx);

// Which generating function egf_oracle_coefficient expands.
struct OracleTarget {
  enum class Kind { Plain, Poly, Higher, Twisted };
  Kind kind = Kind::Plain;
  Scalar x = Rational(0);
  long r = 1;
  std::optional<DirichletCharacter> chi;
  ZeroTerm zero_term = ZeroTerm::Include;

  static OracleTarget plain();
  static OracleTarget poly(Scalar x);
  static OracleTarget higher(long r, Scalar x);
  static OracleTarget twisted(DirichletCharacter chi, ZeroTerm zero_term = ZeroTerm::Include);
};

// Coefficient n of the requested generating function by direct truncated
// summation over the defining series (r nested indices regrouped to one
// with composition counts C(N+r-1, r-1)), certified by a geometric tail
// bound. This is the oracle every closed form above is validated against;
// it deliberately shares no code path with them. Summation is blocked and
// may run the blocks in parallel; the block reduction is ordered, so the
// result does not depend on Exec.
CertifiedValue egf_oracle_coefficient(const OracleTarget& target, long n, const QContext& ctx,
                                      const TailPolicy& policy, Exec exec = Exec::Parallel);
CertifiedValue egf_oracle_coefficient(const OracleTarget& target, long n, const QContext& ctx);

struct CoefficientCheckRow {
  long n = 0;
  Scalar lhs; // coefficient from the generating-function route
  Scalar rhs; // binomial convolution
  bool equal = false;
};

// Verifies, at the series-coefficient level up to order n_max, that the
// polynomial generating function e^{[x]t} F(q^x t) and the binomial
// convolution produce the same coefficients. Exact mode compares exactly;
// certified mode compares within 2^-(prec/2).
std::vector<CoefficientCheckRow> egf_functional_equation_check(long n_max, const Scalar& x,
                                                               const QContext& ctx);

} // namespace qzeta
