#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "ivcol/coloring.hpp"
#include "ivcol/graph.hpp"
#include "ivcol/matrix.hpp"
#include "ivcol/oracle.hpp"

namespace ivcol {

// ordered_json keeps insertion order, so documents print with a stable key
// layout instead of alphabetized keys
using json = nlohmann::ordered_json;

inline json coloring_to_json(const EdgeColoring& c) {
  json doc;
  doc["t"] = c.t();
  json arr = json::array();
  for (const auto& [e, col] : c.assignment()) arr.push_back({e.first, e.second, col});
  doc["edges"] = std::move(arr);
  return doc;
}

// Expected shape: {"t": int, "edges": [[u, v, color], ...]}. Edge pairs are
// normalized on input; duplicate edges are rejected.
inline EdgeColoring coloring_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("t") || !doc.contains("edges") ||
      !doc["t"].is_number_integer() || !doc["edges"].is_array())
    throw ParseError(ParseErrorKind::bad_document,
                     "coloring must be {\"t\": int, \"edges\": [[u,v,c],...]}");
  std::map<Edge, int> a;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number_integer())
      throw ParseError(ParseErrorKind::bad_document,
                       "each edge entry must be [u, v, color]");
    int u = item[0].get<int>(), v = item[1].get<int>(), col = item[2].get<int>();
    if (u == v)
      throw ParseError(ParseErrorKind::self_loop, "self-loop in coloring document");
    Edge e = make_edge(u, v);
    if (a.count(e))
      throw ParseError(ParseErrorKind::duplicate_edge, "duplicate edge in coloring");
    a[e] = col;
  }
  return EdgeColoring(doc["t"].get<int>(), std::move(a));
}

inline EdgeColoring coloring_from_text(const std::string& text) {
  return coloring_from_json(json::parse(text));
}

inline json feasible_set_to_json(const FeasibleSet& fs) {
  json doc;
  doc["feasible"] = fs.feasible;
  json wit = json::object();
  for (const auto& [t, c] : fs.witnesses) wit[std::to_string(t)] = coloring_to_json(c);
  doc["witnesses"] = std::move(wit);
  return doc;
}

inline const char* failure_kind_name(FailureKind k) {
  switch (k) {
    case FailureKind::not_proper: return "not_proper";
    case FailureKind::color_unused: return "color_unused";
    case FailureKind::palette_gap: return "palette_gap";
  }
  return "unknown";
}

inline json report_to_json(const VerificationReport& rep) {
  json doc;
  doc["valid"] = rep.valid;
  doc["is_proper"] = rep.is_proper;
  doc["all_colors_used"] = rep.all_colors_used;
  doc["per_vertex_consecutive"] = rep.per_vertex_consecutive;
  json fails = json::array();
  for (const auto& f : rep.failures) {
    json item;
    item["kind"] = failure_kind_name(f.kind);
    if (f.vertex) item["vertex"] = f.vertex;
    if (f.color) item["color"] = f.color;
    fails.push_back(std::move(item));
  }
  doc["failures"] = std::move(fails);
  return doc;
}

// one row of 0/1 characters per line
inline std::string matrix_to_text(const BinaryMatrix& M) {
  std::string out;
  out.reserve(static_cast<std::size_t>(M.rows()) * (M.cols() + 1));
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) out += M.at(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

inline std::string to_dot(const Graph& g, const EdgeColoring* c = nullptr) {
  std::ostringstream out;
  out << "graph G {\n";
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if (c) out << " [label=\"" << c->color_of(u, v) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ivcol
