#include "qzeta/scalar.hpp"

namespace qzeta {

Scalar parse_scalar(std::string_view s, mpfr_prec_t prec) {
  // rationals and plain integers stay exact
  try {
    return Rational::parse(s);
  } catch (const FormatError&) {
  }
  return Complex::parse(s, prec);
}

Real scalar_abs_upper(const Scalar& s, mpfr_prec_t prec) {
  if (is_exact(s)) return Real::of(std::get<Rational>(s).abs(), prec, MPFR_RNDU);
  return std::get<Complex>(s).abs_upper().to_prec(prec, MPFR_RNDU);
}

std::string scalar_str(const Scalar& s) {
  if (is_exact(s)) return std::get<Rational>(s).str();
  return std::get<Complex>(s).cell_str();
}

} // namespace qzeta
