#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ivcol/errors.hpp"

namespace ivcol {

using Edge = std::pair<int, int>;  // normalized: first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph with contiguous 1-based vertex ids. Edges are
// normalized to (min, max) and kept sorted lexicographically; every API that
// walks edges or neighbors follows that canonical order, which is what makes
// downstream outputs (colorings, witnesses, failure reports) deterministic.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (n_ < 1)
      throw ParseError(ParseErrorKind::bad_header, "vertex count must be positive");
    for (auto& e : edges) e = make_edge(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    adj_.assign(n_ + 1, {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 1 || u > n_ || v < 1 || v > n_)
        throw ParseError(ParseErrorKind::id_out_of_range,
                         "edge endpoint outside 1.." + std::to_string(n_));
      if (u == v)
        throw ParseError(ParseErrorKind::self_loop,
                         "self-loop at vertex " + std::to_string(u));
      if (i > 0 && edges[i] == edges[i - 1])
        throw ParseError(ParseErrorKind::duplicate_edge,
                         "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    // canonical edge order already leaves each adjacency list ascending,
    // but sorting keeps that independent of the argument above
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    edges_ = std::move(edges);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  int max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, static_cast<int>(adj_[v].size()));
    return d;
  }

  bool has_edge(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(u, v));
  }

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw PreconditionError("id out of range",
                              "vertex " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n_));
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

struct BipartitionLabels {
  std::vector<int> left;   // sorted ascending
  std::vector<int> right;  // sorted ascending
};

struct GraphClass {
  bool is_connected = false;
  bool is_tree = false;
  std::optional<BipartitionLabels> bipartition;  // present iff connected and bipartite
  bool is_complete_bipartite = false;
};

// Classification by BFS from vertex 1. For a connected bipartite graph with
// at least two vertices the bipartition is reported with the smaller side on
// the left; on a tie the side containing vertex 1 goes left.
inline GraphClass classify_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n + 1, -1);
  std::vector<int> queue;
  queue.reserve(n);
  side[1] = 0;
  queue.push_back(1);
  bool bipartite = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int u : g.neighbors(v)) {
      if (side[u] < 0) {
        side[u] = side[v] ^ 1;
        queue.push_back(u);
      } else if (side[u] == side[v]) {
        bipartite = false;
      }
    }
  }

  GraphClass cls;
  cls.is_connected = static_cast<int>(queue.size()) == n;
  cls.is_tree = cls.is_connected && g.edge_count() == n - 1;
  if (cls.is_connected && bipartite && n >= 2) {
    BipartitionLabels lab;
    for (int v = 1; v <= n; ++v)
      (side[v] == 0 ? lab.left : lab.right).push_back(v);
    if (lab.right.size() < lab.left.size()) std::swap(lab.left, lab.right);
    cls.is_complete_bipartite =
        g.edge_count() ==
        static_cast<int>(lab.left.size()) * static_cast<int>(lab.right.size());
    cls.bipartition = std::move(lab);
  }
  return cls;
}

namespace detail {

inline bool rest_is_blank(std::istringstream& ss) {
  ss >> std::ws;
  return ss.eof();
}

}  // namespace detail

// Text format: a "n m" header line, then exactly m "u v" lines. Lines whose
// first character is '#' are comments; blank lines are skipped. Anything
// else on a data line past the expected fields is an error.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> data;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    data.push_back(line);
  }
  if (data.empty())
    throw ParseError(ParseErrorKind::bad_header, "missing \"n m\" header line");

  long long n = 0, m = 0;
  {
    std::istringstream ss(data[0]);
    if (!(ss >> n >> m) || !detail::rest_is_blank(ss) || n < 1 || m < 0 ||
        n > 1000000 || m > 10000000)
      throw ParseError(ParseErrorKind::bad_header,
                       "header must be \"n m\" with n >= 1, m >= 0: " + data[0]);
  }
  if (static_cast<long long>(data.size()) - 1 != m)
    throw ParseError(ParseErrorKind::wrong_edge_count,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(data.size() - 1));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < data.size(); ++i) {
    std::istringstream ss(data[i]);
    long long u = 0, v = 0;
    if (!(ss >> u >> v) || !detail::rest_is_blank(ss))
      throw ParseError(ParseErrorKind::bad_edge,
                       "edge line must be \"u v\": " + data[i]);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(ParseErrorKind::id_out_of_range,
                       "edge endpoint outside 1.." + std::to_string(n) + ": " + data[i]);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// K_{m,n} with the x side on ids 1..m and the y side on ids m+1..m+n.
inline Graph make_complete_bipartite(int m, int n) {
  if (m < 1 || n < 1)
    throw PreconditionError("nonpositive size", "complete bipartite sides must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) edges.emplace_back(i, m + j);
  return Graph(m + n, std::move(edges));
}

// The construction-time side labels matching make_complete_bipartite.
inline BipartitionLabels kmn_labels(int m, int n) {
  if (m < 1 || n < 1)
    throw PreconditionError("nonpositive size", "complete bipartite sides must be >= 1");
  BipartitionLabels lab;
  for (int i = 1; i <= m; ++i) lab.left.push_back(i);
  for (int j = 1; j <= n; ++j) lab.right.push_back(m + j);
  return lab;
}

inline Graph make_path(int k) {
  if (k < 1) throw PreconditionError("nonpositive size", "path needs >= 1 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, std::move(edges));
}

inline Graph make_star(int k) {
  if (k < 1) throw PreconditionError("nonpositive size", "star needs >= 1 leaves");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(1, 1 + i);
  return Graph(k + 1, std::move(edges));
}

// splitmix64: the whole stream is a pure function of the seed, so generated
// trees are reproducible across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Uniform random labeled tree with k edges (k+1 vertices): draw a Pruefer
// sequence of length k-1 and decode it with the usual smallest-leaf rule.
inline Graph make_random_tree(int k, std::uint64_t seed) {
  if (k < 1) throw PreconditionError("nonpositive size", "tree needs >= 1 edges");
  const int n = k + 1;
  SplitMix64 rng(seed);
  std::vector<int> pruefer(static_cast<std::size_t>(k - 1));
  for (auto& s : pruefer)
    s = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n)) + 1;

  std::vector<int> deg(n + 1, 1);
  for (int s : pruefer) ++deg[s];
  // min-heap of current leaves, popped smallest-first
  std::vector<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (deg[v] == 1) leaves.push_back(v);
  std::make_heap(leaves.begin(), leaves.end(), std::greater<int>());

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k));
  for (int s : pruefer) {
    std::pop_heap(leaves.begin(), leaves.end(), std::greater<int>());
    int leaf = leaves.back();
    leaves.pop_back();
    edges.emplace_back(leaf, s);
    if (--deg[s] == 1) {
      leaves.push_back(s);
      std::push_heap(leaves.begin(), leaves.end(), std::greater<int>());
    }
  }
  // exactly two leaves remain
  int a = leaves[0], b = leaves[1];
  if (leaves.size() > 2 || a == b)
    throw std::logic_error("pruefer decode invariant broken");
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

}  // namespace ivcol
