#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivcol/coloring.hpp"
#include "ivcol/graph.hpp"

namespace ivcol {

// The exhaustive search refuses graphs above max_edges so accidental huge
// inputs fail fast instead of hanging; callers may raise the cap knowingly.
struct OracleOptions {
  int max_edges = 22;
};

struct FeasibleSet {
  int vertex_count = 0;
  int edge_count = 0;
  int t_max = 0;
  std::vector<int> feasible;
  std::map<int, EdgeColoring> witnesses;
};

namespace detail {

// Backtracking over edges in canonical order, colors tried ascending, so the
// first complete assignment is the lexicographically smallest one. Pruning:
//  - per endpoint, a color is admissible iff it is unused there and keeps
//    max-min+1 within the degree (a window of deg consecutive colors that
//    contains the palette and fits in [1, t] then still exists, since
//    t >= max degree is checked up front);
//  - a color count: if more colors remain unused than edges remain, no
//    completion can use them all.
struct OracleSearch {
  int t = 0;
  int n_edges = 0;
  const std::vector<Edge>* edges = nullptr;

  struct VertexState {
    std::uint64_t mask = 0;
    int min_c = 0;
    int max_c = 0;
    int cnt = 0;
    int deg = 0;
  };
  std::vector<VertexState> vs;
  std::vector<int> color_use;
  int unused = 0;
  std::vector<int> chosen;

  bool admissible(const VertexState& s, int c) const {
    if (s.mask >> c & 1) return false;
    int lo = s.cnt ? std::min(s.min_c, c) : c;
    int hi = s.cnt ? std::max(s.max_c, c) : c;
    return hi - lo + 1 <= s.deg;
  }

  void apply(VertexState& s, int c) {
    s.mask |= std::uint64_t(1) << c;
    s.min_c = s.cnt ? std::min(s.min_c, c) : c;
    s.max_c = s.cnt ? std::max(s.max_c, c) : c;
    ++s.cnt;
  }

  bool dfs(int idx) {
    if (idx == n_edges) return unused == 0;
    auto [u, v] = (*edges)[static_cast<std::size_t>(idx)];
    auto& su = vs[static_cast<std::size_t>(u)];
    auto& sv = vs[static_cast<std::size_t>(v)];
    const int remaining = n_edges - idx - 1;
    for (int c = 1; c <= t; ++c) {
      if (!admissible(su, c) || !admissible(sv, c)) continue;
      VertexState bu = su, bv = sv;
      apply(su, c);
      apply(sv, c);
      bool fresh = color_use[static_cast<std::size_t>(c)]++ == 0;
      if (fresh) --unused;
      if (unused <= remaining) {
        chosen[static_cast<std::size_t>(idx)] = c;
        if (dfs(idx + 1)) return true;
      }
      if (fresh) ++unused;
      --color_use[static_cast<std::size_t>(c)];
      su = bu;
      sv = bv;
    }
    return false;
  }
};

}  // namespace detail

// Decides by exhaustive search whether g has an interval coloring with
// exactly t colors, returning the lexicographically first witness (colors
// read along the canonical edge order) when one exists.
inline std::optional<EdgeColoring> exists_interval_t(const Graph& g, int t,
                                                     const OracleOptions& opts = {}) {
  if (g.edge_count() < 1)
    throw PreconditionError("edgeless graph", "oracle needs at least one edge");
  if (!classify_graph(g).is_connected)
    throw PreconditionError("disconnected graph", "oracle needs a connected graph");
  if (g.edge_count() > opts.max_edges)
    throw PreconditionError("size cap exceeded",
                            "graph has " + std::to_string(g.edge_count()) +
                                " edges, cap is " + std::to_string(opts.max_edges));
  if (t < 1)
    throw PreconditionError("nonpositive color count", "t must be >= 1");
  if (t > 62)
    throw PreconditionError("color count too large", "search supports t <= 62");
  // counting dead ends: an edge carries one color, a vertex needs deg of them
  if (t > g.edge_count() || g.max_degree() > t) return std::nullopt;

  detail::OracleSearch srch;
  srch.t = t;
  srch.n_edges = g.edge_count();
  srch.edges = &g.edges();
  srch.vs.assign(static_cast<std::size_t>(g.vertex_count()) + 1, {});
  for (int v = 1; v <= g.vertex_count(); ++v)
    srch.vs[static_cast<std::size_t>(v)].deg = g.degree(v);
  srch.color_use.assign(static_cast<std::size_t>(t) + 1, 0);
  srch.unused = t;
  srch.chosen.assign(static_cast<std::size_t>(g.edge_count()), 0);

  if (!srch.dfs(0)) return std::nullopt;

  std::map<Edge, int> a;
  for (int i = 0; i < g.edge_count(); ++i)
    a[g.edges()[static_cast<std::size_t>(i)]] = srch.chosen[static_cast<std::size_t>(i)];
  return EdgeColoring(t, std::move(a));
}

// Every feasible t up to t_max (default, and at most, |E|: more colors than
// edges can never all be used), with one witness per feasible t.
inline FeasibleSet oracle_spectrum(const Graph& g, int t_max = 0,
                                   const OracleOptions& opts = {}) {
  if (g.edge_count() < 1)
    throw PreconditionError("edgeless graph", "oracle needs at least one edge");
  int cap = t_max > 0 ? std::min(t_max, g.edge_count()) : g.edge_count();
  FeasibleSet fs;
  fs.vertex_count = g.vertex_count();
  fs.edge_count = g.edge_count();
  fs.t_max = cap;
  for (int t = 1; t <= cap; ++t) {
    auto witness = exists_interval_t(g, t, opts);
    if (witness) {
      fs.feasible.push_back(t);
      fs.witnesses.emplace(t, std::move(*witness));
    }
  }
  return fs;
}

}  // namespace ivcol
