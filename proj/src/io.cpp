#include "qzeta/io.hpp"

namespace qzeta {

Json scalar_to_json(const Scalar& s) {
  if (is_exact(s)) return std::get<Rational>(s).str();
  const Complex& c = std::get<Complex>(s);
  Json j;
  j["re"] = c.re().str();
  j["im"] = c.im().str();
  j["prec_bits"] = static_cast<long>(c.prec());
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_object() && j.contains("re") && j.contains("im") && j.contains("prec_bits")) {
    const mpfr_prec_t prec = j["prec_bits"].get<long>();
    return Complex(Real::parse(j["re"].get<std::string>(), prec),
                   Real::parse(j["im"].get<std::string>(), prec));
  }
  throw FormatError("not a scalar: " + j.dump());
}

Json certified_to_json(const CertifiedValue& v) {
  Json j;
  j["value"] = scalar_to_json(Scalar(v.value));
  j["tail_bound"] = v.tail_bound.str();
  j["terms_used"] = v.terms_used;
  j["mode"] = "certified";
  return j;
}

Json exact_result_to_json(const Rational& v) {
  Json j;
  j["value"] = v.str();
  j["tail_bound"] = "0";
  j["terms_used"] = 0;
  j["mode"] = "exact";
  return j;
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string scalar_to_cell(const Scalar& s) { return scalar_str(s); }

} // namespace qzeta
