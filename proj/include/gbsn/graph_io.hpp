#pragma once

#include <string>

#include "gbsn/graph.hpp"

namespace gbsn {

// Parses the JSON graph document
//   { "rank": n, "vertices": [...], "edges": [ { "id", "from", "to",
//     "matrix_from", "matrix_to" }, ... ] }
// with row-major n x n integer matrices.  Throws ParseError for malformed
// documents (with the offending field) and ValidationError for semantic
// violations.
GLMGraph parse_graph(const std::string& text);

GLMGraph load_graph_file(const std::string& path);

// Writes the same schema with keys in document order.
std::string serialize_graph(const GLMGraph& g);

}  // namespace gbsn
