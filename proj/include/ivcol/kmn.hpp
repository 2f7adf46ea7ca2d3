#pragma once

#include <map>
#include <string>
#include <utility>

#include "ivcol/coloring.hpp"
#include "ivcol/euclid.hpp"
#include "ivcol/graph.hpp"

namespace ivcol {

// Feasible color counts for K_{m,n}: every t with m+n-gcd(m,n) <= t <= m+n-1
// admits an interval coloring, and nothing outside that band does.
struct KmnSpectrum {
  int m = 0;
  int n = 0;
  int w = 0;
  int W = 0;
};

inline KmnSpectrum kmn_spectrum(int m, int n) {
  if (m < 1 || n < 1)
    throw PreconditionError("nonpositive size", "kmn_spectrum needs m, n >= 1");
  int sigma = euclid_trace(m, n).sigma;
  return {m, n, m + n - sigma, m + n - 1};
}

// Staircase: edge (x_i, y_j) gets color i + j - 1, hitting the maximum
// m+n-1 colors. Vertex ids follow make_complete_bipartite (y_j = m + j).
inline EdgeColoring staircase_coloring(int m, int n) {
  if (m < 1 || n < 1)
    throw PreconditionError("nonpositive size", "staircase needs m, n >= 1");
  std::map<Edge, int> a;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) a[{i, m + j}] = i + j - 1;
  return EdgeColoring(m + n - 1, std::move(a));
}

// Color of (x_i, y_j) in the square construction on K_{n,n} with t = n + mu,
// 0 <= mu <= n-1. The first r = n - mu rows are cyclic shifts of 1..n; the
// remaining mu rows continue the staircase past n. Row i <= r sees exactly
// 1..n, row i > r sees i-r+1 .. i-r+n; column j <= r sees 1..n and column
// j > r sees j-r+1 .. j+mu, so every palette is one consecutive run.
inline int square_color_at(int n, int mu, int i, int j) {
  int r = n - mu;
  if (i <= r) return ((j - i) % n + n) % n + 1;
  return j + (i - r);
}

inline EdgeColoring square_coloring(int n, int mu) {
  if (n < 1)
    throw PreconditionError("nonpositive size", "square_coloring needs n >= 1");
  if (mu < 0 || mu > n - 1)
    throw PreconditionError("mu out of range",
                            "mu must lie in 0.." + std::to_string(n - 1));
  std::map<Edge, int> a;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a[{i, n + j}] = square_color_at(n, mu, i, j);
  return EdgeColoring(n + mu, std::move(a));
}

// Block decomposition of K_{m,n} into p*q copies of K_{sigma,sigma} where
// sigma = gcd(m,n), p = m/sigma, q = n/sigma. Block (tau, eps) reuses the
// base square coloring shifted by (tau+eps)*sigma.
struct BlockPlan {
  int m = 0;
  int n = 0;
  int t = 0;
  int sigma = 0;
  int p = 0;
  int q = 0;
  int mu = 0;
  EdgeColoring base;  // square coloring of K_{sigma,sigma} with sigma+mu colors
};

inline BlockPlan block_plan(int m, int n, int t) {
  auto spec = kmn_spectrum(m, n);
  if (t < spec.w || t > spec.W)
    throw SpectrumError(t, spec.w, spec.W,
                        "t=" + std::to_string(t) + " outside feasible range [" +
                            std::to_string(spec.w) + ", " + std::to_string(spec.W) +
                            "] for K_{" + std::to_string(m) + "," +
                            std::to_string(n) + "}");
  int sigma = m + n - spec.w;
  int mu = t - spec.w;
  return {m, n, t, sigma, m / sigma, n / sigma, mu, square_coloring(sigma, mu)};
}

// Color of (x_i, y_j), 1 <= i <= m, 1 <= j <= n. With i = bi + tau*sigma and
// j = bj + eps*sigma the color is (tau+eps)*sigma + base(bi, bj). Shifting by
// the block diagonal keeps x_i's palette a run of length n and y_j's a run of
// length m, and the diagonals 0..p+q-2 together cover all t colors.
inline int kmn_color_at(const BlockPlan& plan, int i, int j) {
  int tau = (i - 1) / plan.sigma, bi = (i - 1) % plan.sigma + 1;
  int eps = (j - 1) / plan.sigma, bj = (j - 1) % plan.sigma + 1;
  return (tau + eps) * plan.sigma + square_color_at(plan.sigma, plan.mu, bi, bj);
}

inline EdgeColoring kmn_coloring(int m, int n, int t) {
  auto plan = block_plan(m, n, t);
  std::map<Edge, int> a;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) a[{i, m + j}] = kmn_color_at(plan, i, j);
  return EdgeColoring(t, std::move(a));
}

// Same construction against caller-supplied side labels, for complete
// bipartite graphs that did not come out of make_complete_bipartite.
inline EdgeColoring kmn_coloring_for(const BipartitionLabels& bip, int t) {
  int m = static_cast<int>(bip.left.size());
  int n = static_cast<int>(bip.right.size());
  auto plan = block_plan(m, n, t);
  std::map<Edge, int> a;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      a[make_edge(bip.left[i - 1], bip.right[j - 1])] = kmn_color_at(plan, i, j);
  return EdgeColoring(t, std::move(a));
}

}  // namespace ivcol
