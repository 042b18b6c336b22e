#pragma once

#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

// Classical number sequences at q = 1, defined by their exponential
// generating functions and computed by the equivalent recurrences:
//   Bernoulli        t/(e^t - 1)
//   Euler            2/(e^t + 1)   (E_1 = -1/2 convention, not secant numbers)
//   Frobenius-Euler  (1-u)/(e^t - u)
// Values are memoized in grow-only caches safe for concurrent callers.

Rational bernoulli(long n);
Rational euler_number(long n);
Rational frobenius_euler(long n, const Rational& u); // u != 1

struct AuditRow {
  long n = 0;
  Rational lhs; // H_n(-1)
  Rational rhs; // sum_{k<=n} C(n+1,k) 2^k B_k
  bool equal = false;
};

// Compares H_n(-1) against the binomial-weighted Bernoulli sum for each
// n <= n_max. This is a report, not an assertion: the identity fails at
// n = 1 (-1/2 vs -1), and the table documents exactly where.
std::vector<AuditRow> bernoulli_euler_identity_audit(long n_max);

} // namespace qzeta
