#pragma once

#include <variant>

#include "qzeta/complex.hpp"
#include "qzeta/rational.hpp"

namespace qzeta {

// A value that is either exact (rational) or certified-approximate (complex
// at some working precision). Which alternative an operation returns is
// decided by the QContext mode.
using Scalar = std::variant<Rational, Complex>;

inline bool is_exact(const Scalar& s) { return std::holds_alternative<Rational>(s); }

inline const Rational& as_rational(const Scalar& s) {
  if (!is_exact(s)) throw DomainError("scalar: expected an exact rational value");
  return std::get<Rational>(s);
}

inline Complex to_complex(const Scalar& s, mpfr_prec_t prec) {
  if (is_exact(s)) return Complex::of(std::get<Rational>(s), prec);
  return std::get<Complex>(s).to_prec(prec);
}

// Parses "p/q", decimal, or "a+bi" forms. Exact rationals stay rational.
Scalar parse_scalar(std::string_view s, mpfr_prec_t prec);

// Rigorous upper bound on |s|.
Real scalar_abs_upper(const Scalar& s, mpfr_prec_t prec);

std::string scalar_str(const Scalar& s); // "p/q" or the complex cell form

} // namespace qzeta
