#pragma once

#include <string>

#include <json.hpp>

#include "qzeta/context.hpp"

namespace qzeta {

using Json = nlohmann::ordered_json;

// Exact scalars serialize as "p/q" strings; approximate ones as
// {"re": decimal, "im": decimal, "prec_bits": n}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"value": ..., "tail_bound": decimal, "terms_used": n, "mode": ...}
Json certified_to_json(const CertifiedValue& v);
Json exact_result_to_json(const Rational& v);

// CSV helpers: RFC-style quoting, complex values as one "re+imi" cell.
std::string csv_escape(const std::string& field);
std::string scalar_to_cell(const Scalar& s);

} // namespace qzeta
