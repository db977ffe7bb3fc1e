#pragma once

// JSON file formats for matrices, weight tables and polyplexes. Rationals
// travel as reduced "p/q" strings ("p" for integers).

#include "mdt/duality.hpp"
#include "mdt/matrix.hpp"
#include "mdt/rational.hpp"
#include "mdt/weights.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace mdt::io {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

/// {"d": ..., "n": ..., "bits": "0101..."}
Json matrix_to_json(const MultiMatrix& a);
MultiMatrix matrix_from_json(const Json& j);

/// {"d": ..., "n": ..., "weights": [[...], ...], "margin"?: ...}
Json table_to_json(const WeightTable& t, const std::optional<Rat>& margin = std::nullopt);
WeightTable table_from_json(const Json& j, std::optional<Rat>* margin = nullptr);

/// {"entries": [[[i0, i1, ...], "p/q"], ...], "total": "p/q"}
Json polyplex_to_json(const Polyplex& k);
Polyplex polyplex_from_json(const Json& j);

/// Text rendering of a report object: one "key: <json>" line per field,
/// arrays spread over "key[i]: <json>" lines. parse_text inverts it.
std::string render_text(const Json& report);
Json parse_text(const std::string& text);

/// Throws IoError when the file cannot be read, ParseError on bad JSON.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace mdt::io
