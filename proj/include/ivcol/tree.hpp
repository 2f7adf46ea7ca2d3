#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ivcol/coloring.hpp"
#include "ivcol/graph.hpp"

namespace ivcol {

// A path in a tree together with its load: ml = number of edges meeting the
// path = 1 + sum over path vertices of (deg - 1). edge_count is the path's
// own edges, boundary_count the pendant remainder hanging off it.
struct PathProfile {
  std::vector<int> vertices;
  int edge_count = 0;
  int boundary_count = 0;
  int ml = 0;
};

struct BigM {
  int value = 0;
  PathProfile witness;
};

struct TreeSpectrum {
  int w = 0;  // max degree
  int W = 0;  // max path load
  PathProfile witness_path;
};

namespace detail {

inline void require_tree(const Graph& g) {
  if (g.edge_count() != g.vertex_count() - 1)
    throw PreconditionError("not a tree", "edge count must be vertex count - 1");
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<int> queue{1};
  seen[1] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int u : g.neighbors(queue[h]))
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        queue.push_back(u);
      }
  if (static_cast<int>(queue.size()) != g.vertex_count())
    throw PreconditionError("not a tree", "graph is disconnected");
}

// Mutable view of a tree that supports pendant-edge peeling. Edge indices
// refer to the graph's canonical edge order; adjacency lists are ascending
// by neighbor, which keeps every scan below deterministic.
struct PeelState {
  const Graph* g;
  std::vector<char> alive;
  std::vector<int> deg;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge index)
  int alive_edges = 0;

  explicit PeelState(const Graph& graph) : g(&graph) {
    const auto& es = graph.edges();
    alive.assign(es.size(), 1);
    deg.assign(static_cast<std::size_t>(graph.vertex_count()) + 1, 0);
    adj.assign(static_cast<std::size_t>(graph.vertex_count()) + 1, {});
    for (int ei = 0; ei < static_cast<int>(es.size()); ++ei) {
      auto [u, v] = es[static_cast<std::size_t>(ei)];
      adj[static_cast<std::size_t>(u)].emplace_back(v, ei);
      adj[static_cast<std::size_t>(v)].emplace_back(u, ei);
      ++deg[static_cast<std::size_t>(u)];
      ++deg[static_cast<std::size_t>(v)];
    }
    alive_edges = static_cast<int>(es.size());
  }

  void remove(int ei) {
    auto [u, v] = g->edges()[static_cast<std::size_t>(ei)];
    alive[static_cast<std::size_t>(ei)] = 0;
    --deg[static_cast<std::size_t>(u)];
    --deg[static_cast<std::size_t>(v)];
    --alive_edges;
  }

  void restore(int ei) {
    auto [u, v] = g->edges()[static_cast<std::size_t>(ei)];
    alive[static_cast<std::size_t>(ei)] = 1;
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
    ++alive_edges;
  }

  // first alive edge in canonical order with a degree-1 endpoint
  int first_pendant() const {
    for (int ei = 0; ei < static_cast<int>(alive.size()); ++ei) {
      if (!alive[static_cast<std::size_t>(ei)]) continue;
      auto [u, v] = g->edges()[static_cast<std::size_t>(ei)];
      if (deg[static_cast<std::size_t>(u)] == 1 || deg[static_cast<std::size_t>(v)] == 1)
        return ei;
    }
    return -1;
  }
};

struct MaxLoad {
  int value = 0;
  int end_a = 0;
  int end_b = 0;
};

// Max path load over the alive subgraph (a tree on its non-isolated
// vertices). Each vertex weighs deg-1; down[v] is the heaviest chain from v
// into its subtree, and the best path through v combines its two heaviest
// child chains, giving load 1 + (deg(v)-1) + top1 + top2. Ties resolve to
// the smallest vertex / earliest child, so the witness is deterministic.
inline MaxLoad max_load(const PeelState& st) {
  int root = 0;
  for (int ei = 0; ei < static_cast<int>(st.alive.size()); ++ei)
    if (st.alive[static_cast<std::size_t>(ei)]) {
      root = st.g->edges()[static_cast<std::size_t>(ei)].first;
      break;
    }
  if (root == 0) return {};

  const int n = st.g->vertex_count();
  std::vector<int> order, parent(static_cast<std::size_t>(n) + 1, 0);
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(root);
  parent[static_cast<std::size_t>(root)] = root;
  for (std::size_t h = 0; h < order.size(); ++h) {
    int v = order[h];
    for (auto [u, ei] : st.adj[static_cast<std::size_t>(v)]) {
      if (!st.alive[static_cast<std::size_t>(ei)] ||
          u == parent[static_cast<std::size_t>(v)])
        continue;
      parent[static_cast<std::size_t>(u)] = v;
      order.push_back(u);
    }
  }

  std::vector<int> down_val(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> down_end(static_cast<std::size_t>(n) + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    int best = 0, best_end = v;
    for (auto [u, ei] : st.adj[static_cast<std::size_t>(v)]) {
      if (!st.alive[static_cast<std::size_t>(ei)] ||
          u == parent[static_cast<std::size_t>(v)])
        continue;
      if (down_val[static_cast<std::size_t>(u)] > best) {
        best = down_val[static_cast<std::size_t>(u)];
        best_end = down_end[static_cast<std::size_t>(u)];
      }
    }
    down_val[static_cast<std::size_t>(v)] = (st.deg[static_cast<std::size_t>(v)] - 1) + best;
    down_end[static_cast<std::size_t>(v)] = best_end;
  }

  MaxLoad out;
  for (int v = 1; v <= n; ++v) {
    if (st.deg[static_cast<std::size_t>(v)] == 0) continue;
    int t1 = 0, t1e = v, t2 = 0, t2e = v;
    for (auto [u, ei] : st.adj[static_cast<std::size_t>(v)]) {
      if (!st.alive[static_cast<std::size_t>(ei)] ||
          u == parent[static_cast<std::size_t>(v)])
        continue;
      int d = down_val[static_cast<std::size_t>(u)];
      int de = down_end[static_cast<std::size_t>(u)];
      if (d > t1) {
        t2 = t1;
        t2e = t1e;
        t1 = d;
        t1e = de;
      } else if (d > t2) {
        t2 = d;
        t2e = de;
      }
    }
    int load = 1 + (st.deg[static_cast<std::size_t>(v)] - 1) + t1 + t2;
    if (load > out.value) {
      out.value = load;
      out.end_a = t1e;
      out.end_b = t2e;
    }
  }
  return out;
}

inline std::vector<int> alive_path_between(const PeelState& st, int a, int b) {
  if (a == b) return {a};
  const int n = st.g->vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> queue{a};
  parent[static_cast<std::size_t>(a)] = a;
  for (std::size_t h = 0; h < queue.size() && parent[static_cast<std::size_t>(b)] == 0;
       ++h) {
    int v = queue[h];
    for (auto [u, ei] : st.adj[static_cast<std::size_t>(v)]) {
      if (!st.alive[static_cast<std::size_t>(ei)] ||
          parent[static_cast<std::size_t>(u)] != 0)
        continue;
      parent[static_cast<std::size_t>(u)] = v;
      queue.push_back(u);
    }
  }
  std::vector<int> path;
  for (int v = b; v != a; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

// Walk both ends of the path out to leaves, smallest neighbor first. Each
// added vertex contributes deg-1 >= 0 to the load, so a maximum-load path
// stays maximum and gains pendant endpoints.
inline std::vector<int> extend_to_leaves(const PeelState& st, std::vector<int> path) {
  auto smallest_other = [&](int v, int avoid) {
    for (auto [u, ei] : st.adj[static_cast<std::size_t>(v)])
      if (st.alive[static_cast<std::size_t>(ei)] && u != avoid) return u;
    return 0;
  };
  while (st.deg[static_cast<std::size_t>(path.front())] > 1) {
    int avoid = path.size() >= 2 ? path[1] : 0;
    int u = smallest_other(path.front(), avoid);
    path.insert(path.begin(), u);
  }
  while (st.deg[static_cast<std::size_t>(path.back())] > 1 || path.size() == 1) {
    int avoid = path.size() >= 2 ? path[path.size() - 2] : 0;
    int u = smallest_other(path.back(), avoid);
    if (u == 0) break;  // isolated single vertex, nothing to extend into
    path.push_back(u);
  }
  return path;
}

// Color the spine left to right: the first edge gets 1, each internal vertex
// v advances the counter by deg(v)-1 before coloring the next spine edge,
// and v's pendant leaves take the skipped colors in neighbor-id order. When
// the path meets every edge and both endpoints are pendant this colors each
// edge exactly once with 1..alive_edges.
inline std::map<Edge, int> spine_colors(const PeelState& st, const std::vector<int>& z) {
  if (z.size() < 2) throw std::logic_error("spine needs a path with an edge");
  std::map<Edge, int> colors;
  colors[make_edge(z[0], z[1])] = 1;
  int c = 1;
  for (std::size_t i = 1; i + 1 < z.size(); ++i) {
    int v = z[i];
    int prev = c;
    c += st.deg[static_cast<std::size_t>(v)] - 1;
    colors[make_edge(v, z[i + 1])] = c;
    int next_col = prev + 1;
    for (auto [u, ei] : st.adj[static_cast<std::size_t>(v)]) {
      if (!st.alive[static_cast<std::size_t>(ei)] || u == z[i - 1] || u == z[i + 1])
        continue;
      colors[make_edge(v, u)] = next_col++;
    }
  }
  return colors;
}

}  // namespace detail

// Load of one explicit path: ml = sum of degrees - path edges, which equals
// 1 + sum of (deg - 1) and counts every edge with an endpoint on the path.
inline PathProfile path_ml(const Graph& tree, const std::vector<int>& path) {
  detail::require_tree(tree);
  if (path.empty())
    throw PreconditionError("not a path", "vertex list is empty");
  std::vector<char> seen(static_cast<std::size_t>(tree.vertex_count()) + 1, 0);
  for (int v : path) {
    if (v < 1 || v > tree.vertex_count() || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("not a path", "vertex list repeats or leaves the tree");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!tree.has_edge(path[i], path[i + 1]))
      throw PreconditionError("not a path", "consecutive vertices must be adjacent");

  PathProfile prof;
  prof.vertices = path;
  prof.edge_count = static_cast<int>(path.size()) - 1;
  int degsum = 0;
  for (int v : path) degsum += tree.degree(v);
  prof.ml = degsum - prof.edge_count;
  prof.boundary_count = prof.ml - prof.edge_count;
  return prof;
}

// Maximum path load over all paths, single vertices included. Computed by
// one tree DP; the witness is stretched to run leaf to leaf.
inline BigM big_m(const Graph& tree) {
  detail::require_tree(tree);
  if (tree.edge_count() < 1)
    throw PreconditionError("edgeless input", "big_m needs at least one edge");
  detail::PeelState st(tree);
  auto ml = detail::max_load(st);
  auto path =
      detail::extend_to_leaves(st, detail::alive_path_between(st, ml.end_a, ml.end_b));
  PathProfile prof = path_ml(tree, path);
  if (prof.ml != ml.value)
    throw std::logic_error("path load DP and witness disagree");
  return {ml.value, std::move(prof)};
}

// Feasible color counts for a tree: exactly max degree .. max path load.
inline TreeSpectrum tree_spectrum(const Graph& tree) {
  auto bm = big_m(tree);
  return {tree.max_degree(), bm.value, std::move(bm.witness)};
}

// Interval coloring with t = |E| colors for a tree whose witness path meets
// every edge. Spine edges take increasing colors, leaves fill the gaps.
inline EdgeColoring spine_coloring(const Graph& tree, const PathProfile& witness) {
  detail::require_tree(tree);
  if (tree.edge_count() < 1)
    throw PreconditionError("edgeless input", "spine_coloring needs at least one edge");
  PathProfile prof = path_ml(tree, witness.vertices);
  if (prof.ml != tree.edge_count())
    throw PreconditionError("witness does not cover all edges",
                            "path load must equal the edge count");
  if (prof.vertices.size() < 2 || tree.degree(prof.vertices.front()) != 1 ||
      tree.degree(prof.vertices.back()) != 1)
    throw PreconditionError("witness endpoints not pendant",
                            "witness must run leaf to leaf");
  detail::PeelState st(tree);
  return EdgeColoring(tree.edge_count(), detail::spine_colors(st, prof.vertices));
}

// Interval t-coloring of a tree for any max_degree <= t <= big_m. Pendant
// edges are peeled (in canonical order, preferring ones that keep the max
// load intact) until the max load equals the edge count, then until t edges
// remain; the core is spine-colored and the peeled edges are replayed in
// reverse, each extending its kept endpoint's palette downward, or upward
// past a palette already sitting at color 1.
inline EdgeColoring tree_coloring(const Graph& tree, int t) {
  detail::require_tree(tree);
  if (tree.edge_count() < 1)
    throw PreconditionError("edgeless input", "tree_coloring needs at least one edge");
  const int delta = tree.max_degree();
  detail::PeelState st(tree);
  const int M = detail::max_load(st).value;
  if (t < delta || t > M)
    throw SpectrumError(t, delta, M,
                        "t=" + std::to_string(t) + " outside feasible range [" +
                            std::to_string(delta) + ", " + std::to_string(M) +
                            "] for this tree");

  const auto& es = tree.edges();
  struct Peeled {
    int ei;
    int keep;  // endpoint that stays in the peeled tree
  };
  std::vector<Peeled> history;

  // shed pendant edges that leave the max load alone until every remaining
  // edge touches a maximum path
  while (M < st.alive_edges) {
    int chosen = -1;
    for (int ei = 0; ei < static_cast<int>(es.size()); ++ei) {
      if (!st.alive[static_cast<std::size_t>(ei)]) continue;
      auto [u, v] = es[static_cast<std::size_t>(ei)];
      if (st.deg[static_cast<std::size_t>(u)] != 1 &&
          st.deg[static_cast<std::size_t>(v)] != 1)
        continue;
      st.remove(ei);
      if (detail::max_load(st).value == M) {
        chosen = ei;
        break;
      }
      st.restore(ei);
    }
    if (chosen < 0)
      throw std::logic_error("no pendant edge preserves the max path load");
    auto [u, v] = es[static_cast<std::size_t>(chosen)];
    history.push_back({chosen, st.deg[static_cast<std::size_t>(u)] == 0 ? v : u});
  }

  // every edge now meets a maximum path, so each further pendant peel drops
  // the max load by exactly one; stop at t edges
  while (st.alive_edges > t) {
    int ei = st.first_pendant();
    st.remove(ei);
    auto [u, v] = es[static_cast<std::size_t>(ei)];
    history.push_back({ei, st.deg[static_cast<std::size_t>(u)] == 0 ? v : u});
  }

  auto ml = detail::max_load(st);
  if (ml.value != st.alive_edges)
    throw std::logic_error("peeled core lost the full-cover property");
  auto z =
      detail::extend_to_leaves(st, detail::alive_path_between(st, ml.end_a, ml.end_b));
  auto colors = detail::spine_colors(st, z);

  // replay newest-first; at each step the state is exactly the tree the edge
  // was removed from, so the kept endpoint's palette is one consecutive run
  while (!history.empty()) {
    auto rec = history.back();
    history.pop_back();
    int y = rec.keep;
    int lambda = std::numeric_limits<int>::max();
    for (auto [nb, ei2] : st.adj[static_cast<std::size_t>(y)])
      if (st.alive[static_cast<std::size_t>(ei2)])
        lambda = std::min(lambda, colors.at(es[static_cast<std::size_t>(ei2)]));
    st.restore(rec.ei);
    colors[es[static_cast<std::size_t>(rec.ei)]] =
        lambda > 1 ? lambda - 1 : st.deg[static_cast<std::size_t>(y)];
  }
  return EdgeColoring(t, std::move(colors));
}

}  // namespace ivcol
