#include "qzeta/character.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace qzeta {

namespace {

long gcd_l(long a, long b) { return std::gcd(a, b); }

bool scalar_is_zero(const Scalar& s) {
  if (is_exact(s)) return std::get<Rational>(s).is_zero();
  return std::get<Complex>(s).is_zero();
}

// exact when both sides are rational, otherwise within 2^-(prec/2)
bool scalar_matches(const Scalar& a, const Scalar& b, mpfr_prec_t prec) {
  if (is_exact(a) && is_exact(b)) return std::get<Rational>(a) == std::get<Rational>(b);
  const Complex ca = to_complex(a, prec), cb = to_complex(b, prec);
  const Real tol = Real::pow2(-static_cast<long>(prec / 2), 64);
  return (ca - cb).abs_upper() <= tol;
}

Scalar scalar_mul(const Scalar& a, const Scalar& b, mpfr_prec_t prec) {
  if (is_exact(a) && is_exact(b))
    return std::get<Rational>(a) * std::get<Rational>(b);
  return to_complex(a, prec) * to_complex(b, prec);
}

Scalar scalar_pow(const Scalar& a, long e, mpfr_prec_t prec) {
  if (is_exact(a)) return std::get<Rational>(a).pow_int(e);
  return to_complex(a, prec).pow_si(e);
}

// Carmichael function: exponent of the unit group mod d.
long carmichael(long d) {
  long lam = 1;
  long rest = d;
  auto lcm_into = [&lam](long v) { lam = std::lcm(lam, v); };
  long two = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++two;
  }
  if (two == 2) lcm_into(2);
  else if (two >= 3) lcm_into(1L << (two - 2));
  for (long p = 3; p * p <= rest; p += 2) {
    if (rest % p != 0) continue;
    long pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    lcm_into(pk / p * (p - 1));
  }
  if (rest > 1) lcm_into(rest - 1);
  return lam;
}

} // namespace

DirichletCharacter DirichletCharacter::from_values(long modulus, std::vector<Scalar> values,
                                                   mpfr_prec_t prec) {
  if (modulus < 1) throw FormatError("character: modulus must be >= 1");
  if (static_cast<long>(values.size()) != modulus)
    throw FormatError("character: expected " + std::to_string(modulus) + " values, got " +
                      std::to_string(values.size()));

  DirichletCharacter chi;
  chi.d_ = modulus;
  chi.values_ = std::move(values);
  for (const Scalar& v : chi.values_)
    if (!is_exact(v)) chi.all_exact_ = false;

  // support axiom: chi(a) = 0 exactly when gcd(a,d) > 1
  for (long a = 0; a < modulus; ++a) {
    const bool unit = gcd_l(a, modulus) == 1;
    if (unit && scalar_is_zero(chi.values_[static_cast<std::size_t>(a)]))
      throw FormatError("character axiom violated: chi(" + std::to_string(a) +
                        ") vanishes on a unit residue (support axiom)");
    if (!unit && !scalar_is_zero(chi.values_[static_cast<std::size_t>(a)]))
      throw FormatError("character axiom violated: chi(" + std::to_string(a) +
                        ") nonzero off the unit group (support axiom)");
  }

  // normalization axiom: chi(1) = 1
  const Scalar one = Rational(1);
  if (!scalar_matches(chi.values_[static_cast<std::size_t>(1 % modulus)], one, prec))
    throw FormatError("character axiom violated: chi(1) != 1 (normalization axiom)");

  // complete multiplicativity on units
  for (long a = 0; a < modulus; ++a) {
    if (gcd_l(a, modulus) != 1) continue;
    for (long b = a; b < modulus; ++b) {
      if (gcd_l(b, modulus) != 1) continue;
      const Scalar prod = scalar_mul(chi.values_[static_cast<std::size_t>(a)],
                                     chi.values_[static_cast<std::size_t>(b)], prec);
      if (!scalar_matches(chi.values_[static_cast<std::size_t>((a * b) % modulus)], prod, prec))
        throw FormatError("character axiom violated: chi(" + std::to_string(a) + ")*chi(" +
                          std::to_string(b) + ") != chi(" + std::to_string((a * b) % modulus) +
                          ") (multiplicativity axiom)");
    }
  }

  // values are roots of unity of order dividing the group exponent
  const long lam = carmichael(modulus);
  for (long a = 0; a < modulus; ++a) {
    if (gcd_l(a, modulus) != 1) continue;
    if (!scalar_matches(scalar_pow(chi.values_[static_cast<std::size_t>(a)], lam, prec), one, prec))
      throw FormatError("character axiom violated: chi(" + std::to_string(a) + ")^" +
                        std::to_string(lam) + " != 1 (root-of-unity axiom)");
  }

  chi.name_ = "mod" + std::to_string(modulus);
  return chi;
}

DirichletCharacter DirichletCharacter::principal(long modulus) {
  if (modulus < 1) throw FormatError("character: modulus must be >= 1");
  std::vector<Scalar> v;
  v.reserve(static_cast<std::size_t>(modulus));
  for (long a = 0; a < modulus; ++a)
    v.push_back(Rational(gcd_l(a, modulus) == 1 ? 1 : 0));
  DirichletCharacter chi = from_values(modulus, std::move(v));
  chi.name_ = "principal mod" + std::to_string(modulus);
  return chi;
}

DirichletCharacter DirichletCharacter::quadratic_mod3() {
  DirichletCharacter chi =
      from_values(3, {Scalar(Rational(0)), Scalar(Rational(1)), Scalar(Rational(-1))});
  chi.name_ = "quadratic mod3";
  return chi;
}

DirichletCharacter DirichletCharacter::quadratic_mod4() {
  DirichletCharacter chi = from_values(
      4, {Scalar(Rational(0)), Scalar(Rational(1)), Scalar(Rational(0)), Scalar(Rational(-1))});
  chi.name_ = "quadratic mod4";
  return chi;
}

const Scalar& DirichletCharacter::value(long m) const {
  long r = m % d_;
  if (r < 0) r += d_;
  return values_[static_cast<std::size_t>(r)];
}

bool DirichletCharacter::value_is_zero(long m) const { return scalar_is_zero(value(m)); }

bool DirichletCharacter::is_principal() const {
  for (long a = 0; a < d_; ++a) {
    if (gcd_l(a, d_) != 1) continue;
    const Scalar& v = values_[static_cast<std::size_t>(a)];
    if (!is_exact(v) || std::get<Rational>(v) != Rational(1)) return false;
  }
  return true;
}

DirichletCharacter DirichletCharacter::resolve(const std::string& spec, mpfr_prec_t prec) {
  if (spec == "builtin:mod1") return principal(1);
  if (spec == "builtin:mod3") return quadratic_mod3();
  if (spec == "builtin:mod4") return quadratic_mod4();
  if (spec.rfind("builtin:", 0) == 0)
    throw FormatError("unknown builtin character '" + spec +
                      "' (available: builtin:mod1, builtin:mod3, builtin:mod4)");
  return load_json_file(spec, prec);
}

DirichletCharacter DirichletCharacter::load_json_file(const std::string& path, mpfr_prec_t prec) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open character file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), prec);
}

DirichletCharacter DirichletCharacter::parse_json(const std::string& text, mpfr_prec_t prec) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("character file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("modulus") || !j.contains("values"))
    throw FormatError("character file must be an object with 'modulus' and 'values'");
  if (!j["modulus"].is_number_integer())
    throw FormatError("character 'modulus' must be an integer");
  const long d = j["modulus"].get<long>();
  if (!j["values"].is_array())
    throw FormatError("character 'values' must be an array");

  std::vector<Scalar> vals;
  for (const auto& v : j["values"]) {
    if (v.is_string()) {
      vals.push_back(parse_scalar(v.get<std::string>(), prec));
    } else if (v.is_number_integer()) {
      vals.push_back(Rational(v.get<long>()));
    } else if (v.is_object() && v.contains("re") && v.contains("im")) {
      auto part = [prec](const nlohmann::json& p) {
        if (p.is_string()) return Real::parse(p.get<std::string>(), prec);
        if (p.is_number()) return Real::of(p.get<double>(), prec);
        throw FormatError("character value parts must be strings or numbers");
      };
      vals.push_back(Complex(part(v["re"]), part(v["im"])));
    } else {
      throw FormatError("character values must be strings, integers, or {re, im} objects");
    }
  }
  return from_values(d, std::move(vals), prec);
}

} // namespace qzeta
