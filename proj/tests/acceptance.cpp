// End-to-end acceptance run. Each criterion prints one [PASS]/[FAIL] line
// with its wall time; the process exits 1 if any criterion fails or blows
// its pinned time budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ivcol/ivcol.hpp"

using namespace ivcol;

namespace {

// pinned wall-clock budgets, seconds; 0 means untimed
constexpr double kBudgetKmnOracle = 300.0;
constexpr double kBudgetKmnSweep = 60.0;
constexpr double kBudgetTreeOracle = 300.0;
constexpr double kBudgetTreeSweep = 120.0;

struct Outcome {
  bool ok = true;
  std::string note;
};

int g_failures = 0;

// search results from criterion 1, reused by criteria 3 and 8
std::map<std::pair<int, int>, FeasibleSet> g_kmn_sets;

template <class F>
void criterion(int idx, const char* label, double budget_s, F body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = budget_s <= 0.0 || secs <= budget_s;
  bool pass = o.ok && in_budget;
  if (!pass) ++g_failures;
  std::printf("[%s] %d. %s (%.2fs", pass ? "PASS" : "FAIL", idx, label, secs);
  if (budget_s > 0.0) std::printf(", budget %.0fs", budget_s);
  std::printf(")");
  if (!o.ok) std::printf(" %s", o.note.c_str());
  if (o.ok && !in_budget) std::printf(" over time budget");
  std::printf("\n");
  std::fflush(stdout);
}

std::vector<int> band(int lo, int hi) {
  std::vector<int> v;
  for (int t = lo; t <= hi; ++t) v.push_back(t);
  return v;
}

std::string kmn_tag(int m, int n) {
  return "K(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

int brute_max_load(const Graph& tree) {
  int best = 0;
  for (int a = 1; a <= tree.vertex_count(); ++a) {
    std::vector<int> parent(static_cast<std::size_t>(tree.vertex_count()) + 1, 0);
    std::vector<int> queue{a};
    parent[static_cast<std::size_t>(a)] = a;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int u : tree.neighbors(queue[h]))
        if (!parent[static_cast<std::size_t>(u)]) {
          parent[static_cast<std::size_t>(u)] = queue[h];
          queue.push_back(u);
        }
    for (int b = a; b <= tree.vertex_count(); ++b) {
      std::vector<int> path;
      for (int v = b; v != a; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
      path.push_back(a);
      best = std::max(best, path_ml(tree, path).ml);
    }
  }
  return best;
}

Outcome check_kmn_oracle() {
  for (int m = 1; m <= 8; ++m)
    for (int n = m; m + n <= 9; ++n) {
      auto g = make_complete_bipartite(m, n);
      auto fs = oracle_spectrum(g);
      g_kmn_sets.emplace(std::make_pair(m, n), fs);
      auto sp = kmn_spectrum(m, n);
      if (fs.feasible != band(sp.w, sp.W))
        return {false, kmn_tag(m, n) + " search band differs from closed form"};
      for (int t : fs.feasible)
        if (!verify_interval(g, fs.witnesses.at(t)).valid)
          return {false, kmn_tag(m, n) + " witness at t=" + std::to_string(t) +
                             " failed verification"};
    }
  return {};
}

Outcome check_kmn_sweep() {
  for (int m = 1; m <= 20; ++m)
    for (int n = 1; n <= 20; ++n) {
      auto g = make_complete_bipartite(m, n);
      auto sp = kmn_spectrum(m, n);
      for (int t = sp.w; t <= sp.W; ++t) {
        auto c = kmn_coloring(m, n, t);
        if (c.t() != t)
          return {false, kmn_tag(m, n) + " construction returned wrong t"};
        if (!verify_interval(g, c).valid)
          return {false, kmn_tag(m, n) + " construction invalid at t=" +
                             std::to_string(t)};
      }
    }
  return {};
}

Outcome check_coprime_singletons() {
  int seen = 0;
  for (const auto& [mn, fs] : g_kmn_sets) {
    auto [m, n] = mn;
    if (std::gcd(m, n) != 1) continue;
    ++seen;
    if (fs.feasible != std::vector<int>{m + n - 1})
      return {false, kmn_tag(m, n) + " should admit exactly t=" +
                         std::to_string(m + n - 1)};
  }
  if (seen == 0) return {false, "no stored search results to inspect"};
  return {};
}

Outcome check_square() {
  for (int n = 1; n <= 5; ++n) {
    auto g = make_complete_bipartite(n, n);
    for (int mu = 0; mu < n; ++mu) {
      auto c = square_coloring(n, mu);
      if (c.t() != n + mu)
        return {false, "square on " + kmn_tag(n, n) + " returned wrong t"};
      if (!verify_interval(g, c).valid)
        return {false, "square on " + kmn_tag(n, n) + " invalid at mu=" +
                           std::to_string(mu)};
      if (!exists_interval_t(g, n + mu, OracleOptions{25}).has_value())
        return {false, "search found no coloring of " + kmn_tag(n, n) +
                           " at t=" + std::to_string(n + mu)};
    }
  }
  return {};
}

Outcome check_tree_oracle() {
  for (int i = 0; i < 200; ++i) {
    int k = 1 + i % 9;
    auto tr = make_random_tree(k, 42 + static_cast<std::uint64_t>(i));
    auto sp = tree_spectrum(tr);
    auto fs = oracle_spectrum(tr);
    if (fs.feasible != band(sp.w, sp.W))
      return {false, "tree #" + std::to_string(i) +
                         " search band differs from max degree .. max load"};
  }
  return {};
}

Outcome check_tree_sweep() {
  for (int i = 0; i < 100; ++i) {
    int k = 2 + (i * 198) / 99;
    auto tr = make_random_tree(k, 9000 + static_cast<std::uint64_t>(i));
    auto sp = tree_spectrum(tr);
    for (int t = sp.w; t <= sp.W; ++t) {
      auto c = tree_coloring(tr, t);
      if (c.t() != t)
        return {false, "tree #" + std::to_string(i) + " construction returned wrong t"};
      if (!verify_interval(tr, c).valid)
        return {false, "tree #" + std::to_string(i) + " construction invalid at t=" +
                           std::to_string(t)};
    }
  }
  return {};
}

Outcome check_max_load() {
  for (int i = 0; i < 500; ++i) {
    int k = 1 + i % 11;
    auto tr = make_random_tree(k, 777 + static_cast<std::uint64_t>(i));
    auto bm = big_m(tr);
    int ref = brute_max_load(tr);
    if (bm.value != ref)
      return {false, "tree #" + std::to_string(i) + " max load " +
                         std::to_string(bm.value) + " but reference " +
                         std::to_string(ref)};
    if (bm.witness.ml != bm.value)
      return {false, "tree #" + std::to_string(i) + " witness load mismatch"};
  }
  return {};
}

Outcome check_matrix_invariants() {
  if (g_kmn_sets.empty()) return {false, "no stored search results to inspect"};
  for (const auto& [mn, fs] : g_kmn_sets) {
    auto [m, n] = mn;
    auto g = make_complete_bipartite(m, n);
    auto bip = kmn_labels(m, n);
    int bound = width_lower_bound(m, n);
    if (fs.feasible.empty() || fs.feasible.front() != bound)
      return {false, kmn_tag(m, n) + " least feasible t is not the width bound"};
    for (int t : fs.feasible) {
      if (t < bound)
        return {false, kmn_tag(m, n) + " admits t below the width bound"};
      const auto& c = fs.witnesses.at(t);
      auto X = extract_incidence(g, bip, c, Side::left);
      auto Y = extract_incidence(g, bip, c, Side::right);
      auto sx = matrix_stats(X), sy = matrix_stats(Y);
      std::string at = kmn_tag(m, n) + " t=" + std::to_string(t);
      if (!sx.collected_matrix || !sy.collected_matrix)
        return {false, at + ": side matrix not collected"};
      if (!sx.regular_r || *sx.regular_r != n || !sy.regular_r || *sy.regular_r != m)
        return {false, at + ": side matrix not regular with the side degree"};
      if (!are_equivalent(X, Y))
        return {false, at + ": side matrices not equivalent"};
      if (!are_conformed(X, Y))
        return {false, at + ": side matrices not mutually conformed"};
    }
  }
  return {};
}

Outcome check_subtraction_trace() {
  for (int k = 1; k <= 50; ++k)
    for (int l = 1; l <= 50; ++l) {
      auto tr = euclid_trace(k, l);
      std::string at = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      if (tr.steps.empty() || tr.s != static_cast<int>(tr.steps.size()))
        return {false, at + ": step count off"};
      if (tr.steps.front().first != std::max(k, l) ||
          tr.steps.front().second != std::min(k, l))
        return {false, at + ": trace must start at (max, min)"};
      for (int i = 0; i + 1 < tr.s; ++i) {
        auto [F, f] = tr.steps[static_cast<std::size_t>(i)];
        if (F == f) return {false, at + ": trace continued past equality"};
        auto [Fn, fn] = tr.steps[static_cast<std::size_t>(i) + 1];
        if (Fn != std::max(F - f, f) || fn != std::min(F - f, f))
          return {false, at + ": subtraction step broken at index " +
                             std::to_string(i + 1)};
      }
      auto [Fs, fs] = tr.steps.back();
      if (Fs != fs || Fs != tr.sigma || tr.sigma != std::gcd(k, l))
        return {false, at + ": trace must end at the gcd"};
    }
  return {};
}

}  // namespace

int main() {
  std::printf("acceptance: interval colorings of complete bipartite graphs and trees\n");

  criterion(1, "exhaustive search matches the closed band on every K(m,n), m+n <= 9",
            kBudgetKmnOracle, check_kmn_oracle);
  criterion(2, "block construction colors every K(m,n), m,n <= 20, at every feasible t",
            kBudgetKmnSweep, check_kmn_sweep);
  criterion(3, "coprime sides admit exactly one color count", 0.0,
            check_coprime_singletons);
  criterion(4, "square construction covers K(n,n), n <= 5, and the search agrees", 0.0,
            check_square);
  criterion(5, "search band on 200 random trees equals max degree .. max load",
            kBudgetTreeOracle, check_tree_oracle);
  criterion(6, "peel construction colors 100 random trees at every feasible t",
            kBudgetTreeSweep, check_tree_sweep);
  criterion(7, "max path load matches the all-pairs reference on 500 random trees", 0.0,
            check_max_load);
  criterion(8, "side matrices of stored witnesses are collected, regular, equivalent, conformed",
            0.0, check_matrix_invariants);
  criterion(9, "subtraction traces follow the recurrence and end at the gcd", 0.0,
            check_subtraction_trace);

  if (g_failures) {
    std::printf("%d of 9 criteria failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
