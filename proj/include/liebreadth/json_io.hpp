#pragma once

#include <json.hpp>
#include <string>

#include "liebreadth/algebra.hpp"

namespace liebreadth {

using Json = nlohmann::json;

// Scalars: "p/q" or "n" over Q and GF(p); {"a", "b", "d"} for a + b sqrt(d).
// Fields: {"kind": "rationals"}, {"kind": "prime", "p": p},
// {"kind": "quadratic", "d": "d"}. Algebras: {"dim", "field", "brackets"}
// with 1-based i < j and zero pairs omitted.

Json to_json(const Scalar& s);
Json to_json(Field f);
Json to_json(const Matrix& m);  // list of rows
Json to_json(const StructureTensor& L);

Field field_from_json(const Json& j);
Scalar scalar_from_json(const Json& j, Field f);
StructureTensor algebra_from_json(const Json& j);

/// Rational "p/q" or "n" read into f; BadParameter when malformed.
Scalar parse_rational(const std::string& text, Field f = Field::rationals());

/// Parses JSON text; malformed input raises ParseError naming `source`, the
/// line and the column.
Json parse_json(const std::string& text, const std::string& source);

/// Canonical text: keys sorted, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace liebreadth
