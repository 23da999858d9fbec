#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "opineq/linalg.hpp"

namespace opineq {

using Json = nlohmann::ordered_json;

/// Matrix text format: {"n": n, "re": [[...]], "im": [[...]]}. "im" is optional
/// on input (all-zero default) and omitted on output when every imaginary
/// part is zero. Doubles are written in shortest round-trip form.
Json to_json(const HermitianMatrix& a);
HermitianMatrix hermitian_from_json(const Json& doc);

/// Rectangular variant used for isometries and unitaries:
/// {"rows": r, "cols": c, "re": [[...]], "im": [[...]]}.
Json to_json(const CMatrix& a);
CMatrix matrix_from_json(const Json& doc);

std::string dump_matrix(const HermitianMatrix& a);
/// Throws ParseError on malformed text, NonHermitianInput on a non-Hermitian payload.
HermitianMatrix parse_matrix(std::string_view text);

}  // namespace opineq
