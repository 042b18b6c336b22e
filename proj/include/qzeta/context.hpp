#pragma once

#include <optional>

#include "qzeta/scalar.hpp"

namespace qzeta {

enum class Mode { Exact, Certified };

// Whether data-parallel kernels actually fan out. Serial keeps the exact
// same block structure and reduction order, so both modes produce
// bit-identical results; the serial path is the reference the tests and
// the benchmark compare against.
enum class Exec { Serial, Parallel };

// Whether series attached to a Dirichlet character include their index-0
// term. Only observable for the modulus-1 character (chi(0) = 0 otherwise),
// and there only in degree 0; the l-function special values use Exclude so
// their defining identity holds at n = 0 as well.
enum class ZeroTerm { Include, Exclude };

// Exact q carried as base^power with base rational in (0,1). The power lets
// derived contexts such as q^d keep exact rational exponents: (q^d)^(a/d)
// evaluates as base^a instead of requiring a rational root.
struct ExactQ {
  Rational base;
  unsigned long power = 1;

  ExactQ() = default;
  explicit ExactQ(Rational b, unsigned long p = 1);

  Rational value() const { return base.pow_int(static_cast<long>(power)); }
  // Exact q^x; throws NonRepresentableError when x*power is not an integer.
  Rational pow(const Rational& x) const;
};

// Convenience form of ExactQ::pow for power == 1 (integer exponents only).
Rational qpow_exact(const Rational& q, const Rational& x);

// Truncation policy: either run until the certified tail bound reaches
// target_bound (term_cap limits the search, exceeding it throws
// TruncationError), or sum exactly fixed_terms terms and report whatever
// bound that yields. Exactly one of the two is set.
struct TailPolicy {
  std::optional<Real> target_bound;
  std::optional<long> fixed_terms;
  long term_cap = 1000000;

  static TailPolicy target(Real bound, long cap = 1000000);
  static TailPolicy terms(long n);
  static TailPolicy default_for(unsigned prec_bits); // target 2^-(prec/2)
};

// An approximate value plus a rigorous bound on |reported - true sum|.
struct CertifiedValue {
  Complex value;
  Real tail_bound;
  long terms_used = 0;
};

// Parameter bundle threaded through every evaluation: q, u, the arithmetic
// mode, the working precision, and the default truncation policy.
// Exact mode requires rational q in (0,1) and rational |u| < 1; certified
// mode accepts complex q (0 < |q| < 1) and complex u (|u| < 1). Exact
// parameter values are retained in certified mode when available so tail
// bounds can be computed from true magnitudes.
class QContext {
public:
  static QContext exact(ExactQ q, Rational u, unsigned prec_bits = 128,
                        std::optional<TailPolicy> policy = std::nullopt);
  static QContext exact(Rational q, Rational u, unsigned prec_bits = 128,
                        std::optional<TailPolicy> policy = std::nullopt);
  static QContext certified(Scalar q, Scalar u, unsigned prec_bits = 128,
                            std::optional<TailPolicy> policy = std::nullopt);

  Mode mode() const { return mode_; }
  unsigned prec_bits() const { return prec_bits_; }
  mpfr_prec_t working_prec() const { return static_cast<mpfr_prec_t>(prec_bits_) + kGuardBits; }
  const TailPolicy& policy() const { return policy_; }

  bool has_exact_params() const { return q_exact_.has_value() && u_exact_.has_value(); }
  const ExactQ& q_exact() const;
  const Rational& u_exact() const;
  Complex q_complex(mpfr_prec_t prec) const;
  Complex u_complex(mpfr_prec_t prec) const;
  bool params_real() const; // both q and u real-valued

  // Rigorous magnitude bounds used by the tail lemmas.
  Real q_abs_upper(mpfr_prec_t prec) const;
  Real u_abs_upper(mpfr_prec_t prec) const;

  // The parameters as scalars (exact when available).
  Scalar q_param() const;
  Scalar u_param() const;

  QContext with_mode(Mode m) const;
  QContext with_policy(TailPolicy p) const;
  QContext with_prec(unsigned prec_bits) const;

  static constexpr mpfr_prec_t kGuardBits = 32;

private:
  QContext() = default;

  Mode mode_ = Mode::Exact;
  unsigned prec_bits_ = 128;
  TailPolicy policy_;
  std::optional<ExactQ> q_exact_;
  std::optional<Rational> u_exact_;
  std::optional<Complex> q_approx_;
  std::optional<Complex> u_approx_;
};

} // namespace qzeta
