#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivcol/coloring.hpp"
#include "ivcol/euclid.hpp"
#include "ivcol/graph.hpp"

namespace ivcol {

// Dense (0,1)-matrix. Entries are addressed 0-based; positions that carry
// combinatorial meaning (leftmost-one columns, xi counts) are reported
// 1-based to match the usual matrix conventions.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols, int fill = 0) : rows_(rows), cols_(cols) {
    if (rows_ < 1 || cols_ < 1)
      throw PreconditionError("empty matrix", "matrix dimensions must be >= 1");
    if (fill != 0 && fill != 1)
      throw PreconditionError("nonbinary entry", "entries must be 0 or 1");
    data_.assign(static_cast<std::size_t>(rows_) * cols_,
                 static_cast<std::uint8_t>(fill));
  }

  explicit BinaryMatrix(const std::vector<std::vector<int>>& entries) {
    rows_ = static_cast<int>(entries.size());
    cols_ = rows_ ? static_cast<int>(entries[0].size()) : 0;
    if (rows_ < 1 || cols_ < 1)
      throw PreconditionError("empty matrix", "matrix dimensions must be >= 1");
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : entries) {
      if (static_cast<int>(row.size()) != cols_)
        throw PreconditionError("ragged rows", "all rows must have equal length");
      for (int v : row) {
        if (v != 0 && v != 1)
          throw PreconditionError("nonbinary entry", "entries must be 0 or 1");
        data_.push_back(static_cast<std::uint8_t>(v));
      }
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int at(int i, int j) const { return data_[idx(i, j)]; }
  void set(int i, int j, int v) { data_[idx(i, j)] = static_cast<std::uint8_t>(v); }

  int row_sum(int i) const {
    int s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j);
    return s;
  }

  int col_sum(int j) const {
    int s = 0;
    for (int i = 0; i < rows_; ++i) s += at(i, j);
    return s;
  }

  bool operator==(const BinaryMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw PreconditionError("index out of range", "matrix index out of range");
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> data_;
};

struct MatrixStats {
  bool all_rows_collected = false;  // each row's ones consecutive, >= 1 one
  bool all_cols_collected = false;
  std::optional<int> regular_r;     // common row sum, when rows agree and >= 1
  bool collected_matrix = false;    // rows+cols collected, corners set, eps monotone
  std::vector<int> eps;  // per row: 1-based column of the leftmost one
  std::vector<int> xi;   // per column c (1-based): number of rows with eps == c
};

namespace detail {

// ones consecutive and at least one of them
template <class Get>
bool run_collected(Get get, int len, int* first = nullptr) {
  int lo = -1, hi = -1;
  int count = 0;
  for (int k = 0; k < len; ++k) {
    if (get(k)) {
      if (lo < 0) lo = k;
      hi = k;
      ++count;
    }
  }
  if (first) *first = lo + 1;
  return count >= 1 && hi - lo + 1 == count;
}

}  // namespace detail

inline MatrixStats matrix_stats(const BinaryMatrix& M) {
  MatrixStats st;
  st.all_rows_collected = true;
  st.all_cols_collected = true;

  std::vector<int> firsts(static_cast<std::size_t>(M.rows()), 0);
  for (int i = 0; i < M.rows(); ++i) {
    int first = 0;
    bool ok = detail::run_collected([&](int j) { return M.at(i, j); }, M.cols(), &first);
    if (!ok) st.all_rows_collected = false;
    firsts[static_cast<std::size_t>(i)] = first;
  }
  for (int j = 0; j < M.cols(); ++j) {
    if (!detail::run_collected([&](int i) { return M.at(i, j); }, M.rows()))
      st.all_cols_collected = false;
  }

  int r = M.row_sum(0);
  bool regular = r >= 1;
  for (int i = 1; i < M.rows() && regular; ++i) regular = M.row_sum(i) == r;
  if (regular) st.regular_r = r;

  if (st.all_rows_collected && st.all_cols_collected) {
    st.eps = firsts;
    st.xi.assign(static_cast<std::size_t>(M.cols()), 0);
    for (int e : st.eps) ++st.xi[static_cast<std::size_t>(e - 1)];
    bool monotone = std::is_sorted(st.eps.begin(), st.eps.end());
    st.collected_matrix = monotone && M.at(0, 0) == 1 &&
                          M.at(M.rows() - 1, M.cols() - 1) == 1;
  }
  return st;
}

// Same multiset of columns counted by sums: both matrices spread their ones
// over the color axis identically.
inline bool are_equivalent(const BinaryMatrix& A, const BinaryMatrix& B) {
  if (A.cols() != B.cols())
    throw PreconditionError("column-count mismatch",
                            "equivalence needs equal column counts");
  for (int j = 0; j < A.cols(); ++j)
    if (A.col_sum(j) != B.col_sum(j)) return false;
  return true;
}

// A's common row sum equals B's row count and vice versa, the shape a pair of
// side-incidence matrices of one complete bipartite graph must have.
inline bool are_conformed(const BinaryMatrix& A, const BinaryMatrix& B) {
  auto sa = matrix_stats(A), sb = matrix_stats(B);
  if (!sa.regular_r || !sb.regular_r)
    throw PreconditionError("non-regular input", "conformance needs regular matrices");
  return *sa.regular_r == B.rows() && *sb.regular_r == A.rows();
}

enum class Side { left, right };

// Rows: one per vertex of the chosen side, sorted by (palette start, id);
// columns: colors 1..t; entry 1 iff the color appears at the vertex. For a
// valid interval coloring this is a collected regular matrix.
inline BinaryMatrix extract_incidence(const Graph& g, const BipartitionLabels& bip,
                                      const EdgeColoring& c, Side side) {
  if (!std::is_sorted(bip.left.begin(), bip.left.end()) ||
      !std::is_sorted(bip.right.begin(), bip.right.end()))
    throw PreconditionError("bad bipartition", "labels must be sorted ascending");
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (int v : bip.left) {
    if (v < 1 || v > g.vertex_count() || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("bad bipartition", "labels must partition the vertices");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int v : bip.right) {
    if (v < 1 || v > g.vertex_count() || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("bad bipartition", "labels must partition the vertices");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw PreconditionError("bad bipartition", "labels must partition the vertices");
  long long want = static_cast<long long>(bip.left.size()) *
                   static_cast<long long>(bip.right.size());
  if (g.edge_count() != want)
    throw PreconditionError("not complete bipartite",
                            "graph must contain every cross edge");
  for (auto [u, v] : g.edges()) {
    bool ul = std::binary_search(bip.left.begin(), bip.left.end(), u);
    bool vl = std::binary_search(bip.left.begin(), bip.left.end(), v);
    if (ul == vl)
      throw PreconditionError("not complete bipartite", "edge inside one side");
  }
  if (!verify_interval(g, c).valid)
    throw PreconditionError("invalid coloring",
                            "incidence extraction needs a valid interval coloring");

  const auto& verts = side == Side::left ? bip.left : bip.right;
  std::vector<std::pair<int, int>> order;  // (palette start, vertex)
  order.reserve(verts.size());
  for (int v : verts)
    order.emplace_back(vertex_palette(g, c, v).interval->first, v);
  std::sort(order.begin(), order.end());

  BinaryMatrix M(static_cast<int>(verts.size()), c.t());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    int v = order[static_cast<std::size_t>(i)].second;
    for (int col : vertex_palette(g, c, v).colors) M.set(i, col - 1, 1);
  }
  return M;
}

struct ReducedPair {
  BinaryMatrix p1;
  BinaryMatrix q1;
};

// One step of the matrix reduction. P is an n-regular collected m x w matrix,
// Q an m-regular collected n x w matrix, m > n, equal column sums, and column
// n full in both. P1 drops P's first n rows and columns. Q1 zeroes, in row i,
// everything left of eps(i)+n and then drops the first n columns. The result
// is a pair of the same shape on (m-n, n), which is what lets the reduction
// recurse along the subtraction gcd trace.
inline ReducedPair reduce_pair(const BinaryMatrix& P, const BinaryMatrix& Q) {
  auto sp = matrix_stats(P), sq = matrix_stats(Q);
  const int m = P.rows(), n = Q.rows(), w = P.cols();
  if (!sp.collected_matrix)
    throw PreconditionError("P not collected", "P must be a collected matrix");
  if (!sq.collected_matrix)
    throw PreconditionError("Q not collected", "Q must be a collected matrix");
  if (!sp.regular_r) throw PreconditionError("P not regular", "P must be regular");
  if (!sq.regular_r) throw PreconditionError("Q not regular", "Q must be regular");
  if (Q.cols() != w)
    throw PreconditionError("width mismatch", "P and Q must share their width");
  if (*sp.regular_r != n || *sq.regular_r != m)
    throw PreconditionError("not mutually conformed",
                            "row sums must equal the partner's row count");
  if (m <= n)
    throw PreconditionError("m > n required", "P must have more rows than Q");
  if (!are_equivalent(P, Q))
    throw PreconditionError("not equivalent", "column sums must agree");
  if (P.col_sum(n - 1) != n || Q.col_sum(n - 1) != n)
    throw PreconditionError("column condition violated",
                            "column n must be full in both matrices");

  BinaryMatrix p1(m - n, w - n);
  for (int i = n; i < m; ++i)
    for (int j = n; j < w; ++j) p1.set(i - n, j - n, P.at(i, j));

  BinaryMatrix q1(n, w - n);
  for (int i = 0; i < n; ++i) {
    int eps = sq.eps[static_cast<std::size_t>(i)];  // 1-based
    for (int j = n + 1; j <= w; ++j) {              // 1-based column
      int val = j < eps + n ? 0 : Q.at(i, j - 1);
      q1.set(i, j - n - 1, val);
    }
  }
  return {std::move(p1), std::move(q1)};
}

inline int width_lower_bound(int m, int n) {
  if (m < 1 || n < 1)
    throw PreconditionError("nonpositive size", "width_lower_bound needs m, n >= 1");
  return m + n - euclid_trace(m, n).sigma;
}

}  // namespace ivcol
