#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "isoprod/datum.hpp"
#include "isoprod/search.hpp"

namespace isoprod::document {

using Json = nlohmann::json;

/// Exponent tuple of an element, as stored in documents.
Json element_json(const GroupElement& g);

/// {"group": [...], "kernels": [[tuple...] x3], "vectors": [{"branch", "eta",
/// "g_prime"} x3]}. Keys are sorted, so dump() is canonical.
Json datum_json(const AlgebraicDatum& d);

/// Throws Error(kSchema) naming the offending path.
AlgebraicDatum parse_datum(const Json& doc);

/// Throws Error(kParse) for malformed JSON text.
Json parse_text(std::string_view text);
Json read_file(const std::string& path);

/// Canonical text of a document: two-space indentation, trailing newline.
std::string dump(const Json& j);

/// {"group", "kernels": "cyclic" | [[[tuple...] x3]...], "g_prime", "max_branch",
///  "max_branch_order", "eta": "canonical" | "all", "cap"}; missing keys take
/// the SearchSpec defaults except "group".
SearchSpec parse_search_spec(const Json& doc);

}  // namespace isoprod::document
