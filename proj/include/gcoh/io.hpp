#pragma once

// JSON readers and writers for the model descriptions accepted by the CLI.
// Integers may be JSON integers or decimal strings; everything written out
// uses decimal strings so that no value is ever squeezed through a double.

#include <gcoh/abelian_group.hpp>
#include <gcoh/finite_group.hpp>
#include <gcoh/groupoid.hpp>
#include <gcoh/simplicial.hpp>
#include <gcoh/tower.hpp>
#include <gcoh/twist.hpp>

#include <json.hpp>

#include <string>

namespace gcoh::io {

using Json = nlohmann::json;

/// Inline JSON if the text starts with '{' or '[', otherwise a file path.
/// Malformed JSON raises ValidationError with the byte position.
Json parse_json_argument(const std::string& text);
Json parse_json_text(const std::string& text, const std::string& origin = "input");

BigInt read_integer(const Json& j, const std::string& what);
long read_small(const Json& j, const std::string& what, long lo, long hi);
IntMatrix read_matrix(const Json& j, const std::string& what);
/// {"free": r, "torsion": [d, ...]} or a canonical string such as "Z^2 + Z/4".
FgAbGroup read_group(const Json& j, const std::string& what);
FgAbGroup parse_group(const std::string& text);
FiniteSystem read_system(const Json& j);
SimplicialComplex read_complex(const Json& j);
Tower read_tower(const Json& j);
FiniteGroup read_finite_group(const Json& j);

Json write_integer(const BigInt& a);
/// {"free": r, "torsion": ["d1", ...]}.
Json write_group(const FgAbGroup& g);
Json write_matrix(const IntMatrix& m);
Json write_vector(const IntVector& v);
Json write_report(const VerificationReport& r);

}  // namespace gcoh::io
