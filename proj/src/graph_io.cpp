#include "gbsn/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gbsn/errors.hpp"

namespace gbsn {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

long long expect_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + ": expected an integer, got " + std::string(j.type_name()));
  return j.get<long long>();
}

std::string expect_string(const json& j, const std::string& where) {
  if (!j.is_string())
    throw ParseError(where + ": expected a string, got " + std::string(j.type_name()));
  return j.get<std::string>();
}

const json& expect_field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

MatZ parse_matrix(const json& j, int n, const std::string& where) {
  if (!j.is_array() || int(j.size()) != n)
    throw ParseError(where + ": expected an array of " + std::to_string(n) + " rows");
  MatZ m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || int(row.size()) != n)
      throw ParseError(rw + ": expected an array of " + std::to_string(n) + " integers");
    for (int k = 0; k < n; ++k)
      m.at(i, k) = Int(long(expect_int(row[k], rw + "[" + std::to_string(k) + "]")));
  }
  return m;
}

}  // namespace

GLMGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");

  long long rank = expect_int(expect_field(doc, "rank", "top level"), "rank");
  if (rank < 1) throw ValidationError("rank must be at least 1, got " + std::to_string(rank));
  if (rank > 64) throw ValidationError("rank " + std::to_string(rank) + " is unreasonably large");
  int n = int(rank);

  const json& jverts = expect_field(doc, "vertices", "top level");
  if (!jverts.is_array() || jverts.empty())
    throw ParseError("vertices: expected a nonempty array");
  std::vector<std::string> vertices;
  for (size_t i = 0; i < jverts.size(); ++i)
    vertices.push_back(expect_string(jverts[i], "vertices[" + std::to_string(i) + "]"));

  const json& jedges = expect_field(doc, "edges", "top level");
  if (!jedges.is_array()) throw ParseError("edges: expected an array");
  std::vector<EdgePair> edges;
  for (size_t i = 0; i < jedges.size(); ++i) {
    std::string where = "edges[" + std::to_string(i) + "]";
    const json& je = jedges[i];
    EdgePair e;
    e.id = expect_string(expect_field(je, "id", where), where + ".id");
    std::string from = expect_string(expect_field(je, "from", where), where + ".from");
    std::string to = expect_string(expect_field(je, "to", where), where + ".to");
    auto vidx = [&](const std::string& name) {
      for (size_t v = 0; v < vertices.size(); ++v)
        if (vertices[v] == name) return int(v);
      throw ValidationError(where + ": unknown vertex '" + name + "'");
    };
    e.from = vidx(from);
    e.to = vidx(to);
    e.matrix_from = parse_matrix(expect_field(je, "matrix_from", where), n, where + ".matrix_from");
    e.matrix_to = parse_matrix(expect_field(je, "matrix_to", where), n, where + ".matrix_to");
    edges.push_back(std::move(e));
  }
  return GLMGraph(n, std::move(vertices), std::move(edges));
}

GLMGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize_graph(const GLMGraph& g) {
  ordered_json doc;
  doc["rank"] = g.rank();
  doc["vertices"] = g.vertices();
  doc["edges"] = ordered_json::array();
  for (const EdgePair& e : g.edges()) {
    ordered_json je;
    je["id"] = e.id;
    je["from"] = g.vertex_name(e.from);
    je["to"] = g.vertex_name(e.to);
    auto mat = [&](const MatZ& m) {
      ordered_json rows = ordered_json::array();
      for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) {
          if (!m.at(i, j).fits_slong_p())
            throw Error("edge '" + e.id + "': matrix entry exceeds the JSON integer range");
          row.push_back(m.at(i, j).get_si());
        }
        rows.push_back(std::move(row));
      }
      return rows;
    };
    je["matrix_from"] = mat(e.matrix_from);
    je["matrix_to"] = mat(e.matrix_to);
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

}  // namespace gbsn
