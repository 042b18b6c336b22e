#pragma once

#include <string>
#include <vector>

#include "qzeta/scalar.hpp"

namespace qzeta {

// Dirichlet character given by its modulus-d value table. Construction
// validates the axioms (support on units, normalization chi(1)=1, complete
// multiplicativity on units, values are roots of unity) and rejects
// violations with a diagnostic naming the failed axiom. Values may be exact
// rationals (0, +-1 for the built-ins) or complex roots of unity.
class DirichletCharacter {
public:
  static DirichletCharacter from_values(long modulus, std::vector<Scalar> values,
                                        mpfr_prec_t prec = 128);

  static DirichletCharacter principal(long modulus);
  static DirichletCharacter quadratic_mod3(); // chi(1)=1, chi(2)=-1
  static DirichletCharacter quadratic_mod4(); // chi(1)=1, chi(3)=-1

  // "builtin:mod1" | "builtin:mod3" | "builtin:mod4", or a path to a JSON
  // file {"modulus": d, "values": [...]} with entries "p/q", decimal, or
  // {"re": ..., "im": ...}.
  static DirichletCharacter resolve(const std::string& spec, mpfr_prec_t prec = 128);
  static DirichletCharacter load_json_file(const std::string& path, mpfr_prec_t prec = 128);
  static DirichletCharacter parse_json(const std::string& text, mpfr_prec_t prec = 128);

  long modulus() const { return d_; }
  const std::vector<Scalar>& values() const { return values_; }
  const Scalar& value(long m) const; // m reduced mod d, negatives included
  bool value_is_zero(long m) const;
  bool all_exact() const { return all_exact_; }
  bool is_principal() const;
  std::string name() const { return name_; }

private:
  DirichletCharacter() = default;
  long d_ = 1;
  std::vector<Scalar> values_;
  bool all_exact_ = true;
  std::string name_;
};

} // namespace qzeta
