#pragma once

#include <functional>

#include "qzeta/context.hpp"

namespace qzeta::detail {

inline constexpr mpfr_prec_t kBoundPrec = 96;

// Covers the final rounding to prec_bits plus the guard-bit-absorbed
// arithmetic rounding of the summation: 2^(2-prec) * |v|.
inline Real rounding_allowance(const Complex& v, unsigned prec_bits) {
  return Real::mul(v.abs_upper().to_prec(kBoundPrec, MPFR_RNDU),
                   Real::pow2(2 - static_cast<long>(prec_bits), kBoundPrec), MPFR_RNDU);
}

// Picks the number of terms to sum. bound_at(M) must be a rigorous,
// non-increasing-in-M truncation bound (+inf allowed while degenerate).
// In target mode the search aims at half the requested bound, leaving the
// other half for the rounding allowance added by finalize_certified.
inline long decide_terms(const TailPolicy& policy, const std::function<Real(long)>& bound_at,
                         Real& bound_out) {
  if (policy.fixed_terms) {
    bound_out = bound_at(*policy.fixed_terms);
    return *policy.fixed_terms;
  }
  const Real half = Real::mul(*policy.target_bound, Real::of(0.5, kBoundPrec), MPFR_RNDN);
  long m = 8;
  for (;;) {
    bound_out = bound_at(m);
    if (bound_out <= half) return m;
    if (m >= policy.term_cap)
      throw TruncationError("target tail bound not reached within the term cap of " +
                            std::to_string(policy.term_cap) + " terms");
    m = std::min(policy.term_cap, m * 2);
  }
}

// Rounds the raw working-precision value to prec_bits, folds the rounding
// allowance into the bound, and enforces the target if one was requested.
inline CertifiedValue finalize_certified(const Complex& raw, const Real& trunc_bound,
                                         long terms, const TailPolicy& policy,
                                         unsigned prec_bits) {
  const Real bound =
      Real::add(trunc_bound.to_prec(kBoundPrec, MPFR_RNDU), rounding_allowance(raw, prec_bits),
                MPFR_RNDU);
  if (policy.target_bound && !(bound <= *policy.target_bound))
    throw TruncationError(
        "certified bound " + bound.str() +
        " exceeds the requested target; raise the precision or relax the bound");
  return CertifiedValue{raw.to_prec(static_cast<mpfr_prec_t>(prec_bits)), bound, terms};
}

} // namespace qzeta::detail
