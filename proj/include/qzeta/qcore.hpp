#pragma once

#include "qzeta/context.hpp"

namespace qzeta {

// [x]_q = (1 - q^x) / (1 - q).
// Exact mode requires integer x >= 0; certified mode accepts complex x.
Scalar q_bracket(const Scalar& x, const QContext& ctx);
Rational q_bracket_exact(long x, const QContext& ctx);
Complex q_bracket_approx(const Complex& x, const Complex& q, const Complex& log_q);

// Sum of the geometric series a + a*ratio + a*ratio^2 + ... = a/(1-ratio).
// Requires |ratio| < 1.
Rational geometric_sum(const Rational& a, const Rational& ratio);
Complex geometric_sum(const Complex& a, const Complex& ratio);

// Upper bound first/(1-ratio) on a geometric tail whose first omitted term
// has magnitude at most `first` and whose term ratio is at most `ratio` in
// magnitude. The Real overload rounds outward, so the result is a rigorous
// bound even in floating arithmetic.
Rational tail_bound_geometric(const Rational& first, const Rational& ratio);
Real tail_bound_geometric(const Real& first, const Real& ratio);

} // namespace qzeta
