#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ivcol/graph.hpp"

namespace ivcol {

// Edge coloring together with the claimed number of colors t. Carrying t
// explicitly (instead of inferring max used color) is what lets the verifier
// catch colorings that skip colors.
class EdgeColoring {
 public:
  EdgeColoring(int t, std::map<Edge, int> assignment)
      : t_(t), assignment_(std::move(assignment)) {
    if (t_ < 1)
      throw PreconditionError("nonpositive color count", "t must be >= 1");
    for (const auto& [e, c] : assignment_) {
      if (e.first >= e.second)
        throw PreconditionError("malformed coloring",
                                "edge keys must be normalized (u < v)");
      if (c < 1 || c > t_)
        throw PreconditionError("color out of range",
                                "color " + std::to_string(c) + " outside 1.." +
                                    std::to_string(t_));
    }
  }

  int t() const { return t_; }
  const std::map<Edge, int>& assignment() const { return assignment_; }

  int color_of(int u, int v) const {
    auto it = assignment_.find(make_edge(u, v));
    if (it == assignment_.end())
      throw PreconditionError("edge-set mismatch", "edge not in coloring");
    return it->second;
  }

 private:
  int t_;
  std::map<Edge, int> assignment_;
};

enum class FailureKind { not_proper, color_unused, palette_gap };

// One witness per violated clause; vertex/color are 0 when not applicable.
struct Failure {
  FailureKind kind;
  int vertex = 0;
  int color = 0;
};

struct VerificationReport {
  bool is_proper = false;
  bool all_colors_used = false;
  bool per_vertex_consecutive = false;
  bool valid = false;
  std::vector<Failure> failures;
};

// Checks the three clauses independently: proper at every vertex, colors
// 1..t all present, and each vertex's incident color set equal to a run of
// consecutive integers of length deg(v). Witnesses are the smallest offending
// vertex (then smallest color) so reports are deterministic.
inline VerificationReport verify_interval(const Graph& g, const EdgeColoring& c) {
  if (g.edge_count() < 1)
    throw PreconditionError("edgeless graph", "verification needs >= 1 edge");
  const auto& asg = c.assignment();
  if (static_cast<int>(asg.size()) != g.edge_count())
    throw PreconditionError("edge-set mismatch",
                            "coloring covers a different number of edges");
  for (const auto& e : g.edges())
    if (!asg.count(e))
      throw PreconditionError("edge-set mismatch", "graph edge missing from coloring");

  std::vector<std::vector<int>> inc(g.vertex_count() + 1);
  for (const auto& [e, col] : asg) {
    inc[e.first].push_back(col);
    inc[e.second].push_back(col);
  }

  VerificationReport rep;
  rep.is_proper = true;
  rep.all_colors_used = true;
  rep.per_vertex_consecutive = true;

  for (int v = 1; v <= g.vertex_count() && rep.is_proper; ++v) {
    auto cols = inc[v];
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
      if (cols[i] == cols[i + 1]) {
        rep.is_proper = false;
        rep.failures.push_back({FailureKind::not_proper, v, cols[i]});
        break;
      }
    }
  }

  std::vector<char> used(static_cast<std::size_t>(c.t()) + 1, 0);
  for (const auto& [e, col] : asg) used[static_cast<std::size_t>(col)] = 1;
  for (int col = 1; col <= c.t(); ++col) {
    if (!used[static_cast<std::size_t>(col)]) {
      rep.all_colors_used = false;
      rep.failures.push_back({FailureKind::color_unused, 0, col});
      break;
    }
  }

  for (int v = 1; v <= g.vertex_count() && rep.per_vertex_consecutive; ++v) {
    if (inc[v].empty()) continue;
    auto cols = inc[v];
    std::sort(cols.begin(), cols.end());
    bool distinct = std::adjacent_find(cols.begin(), cols.end()) == cols.end();
    bool run = cols.back() - cols.front() + 1 == static_cast<int>(cols.size());
    if (!distinct || !run) {
      rep.per_vertex_consecutive = false;
      rep.failures.push_back({FailureKind::palette_gap, v, 0});
    }
  }

  rep.valid = rep.is_proper && rep.all_colors_used && rep.per_vertex_consecutive;
  return rep;
}

struct VertexPalette {
  std::vector<int> colors;                        // sorted incident colors
  std::optional<std::pair<int, int>> interval;    // (lo, hi) when consecutive
};

inline VertexPalette vertex_palette(const Graph& g, const EdgeColoring& c, int v) {
  if (g.degree(v) == 0)
    throw PreconditionError("isolated vertex", "vertex has no incident edges");
  VertexPalette pal;
  for (int u : g.neighbors(v)) {
    auto it = c.assignment().find(make_edge(v, u));
    if (it == c.assignment().end())
      throw PreconditionError("edge-set mismatch", "incident edge missing from coloring");
    pal.colors.push_back(it->second);
  }
  std::sort(pal.colors.begin(), pal.colors.end());
  bool distinct =
      std::adjacent_find(pal.colors.begin(), pal.colors.end()) == pal.colors.end();
  if (distinct &&
      pal.colors.back() - pal.colors.front() + 1 == static_cast<int>(pal.colors.size()))
    pal.interval = {pal.colors.front(), pal.colors.back()};
  return pal;
}

}  // namespace ivcol
