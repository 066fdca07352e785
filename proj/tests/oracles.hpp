#pragma once

// Independent reference implementations used to cross-check the library on
// small instances. Each oracle is deliberately assumption-free: it enumerates
// the whole search space by brute force instead of reusing the library's
// pruning arguments, so agreement is evidence, not circularity.
//
// Conventions shared with the library (pinned here on purpose, since the
// oracles must test the same mathematical statement):
//   - deletion budget  = floor(d(G) * rho(|X|) * |X| + 1e-12)
//   - a neighborhood refutes only when |N| < rho(|X|) * |X| - 1e-12
//   - admissible sizes:  ceil(k/2 - 1e-12) <= |X|  and  2|X| <= n

#include <algorithm>
#include <cstdint>
#include <cmath>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "crux/expansion.hpp"
#include "crux/graph.hpp"
#include "crux/rational.hpp"
#include "crux/subdivision.hpp"

namespace crux::oracle {

constexpr double kGuard = 1e-12;

// ---------------------------------------------------------------------------
// Robust-expander oracle.
// ---------------------------------------------------------------------------

// Minimum |N_{G-F}(X)| over ALL edge subsets F of size <= budget, not just
// boundary edges: the claim that only X-boundary edges matter is exactly the
// kind of shortcut this oracle must not share. Enumerates combinations of the
// full edge list.
inline std::size_t min_neighbors_all_deletions(const Graph& g,
                                               const std::vector<int>& x,
                                               std::size_t budget) {
  const auto all_edges = g.edges();
  const int m = static_cast<int>(all_edges.size());
  std::vector<char> in_x(g.vertex_count(), 0);
  for (int v : x) in_x[v] = 1;

  auto count_neighbors = [&](const std::vector<char>& removed) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::size_t cnt = 0;
    for (int e = 0; e < m; ++e) {
      if (removed[e]) continue;
      auto [u, v] = all_edges[e];
      if (in_x[u] && !in_x[v] && !seen[v]) { seen[v] = 1; ++cnt; }
      if (in_x[v] && !in_x[u] && !seen[u]) { seen[u] = 1; ++cnt; }
    }
    return cnt;
  };

  std::size_t best = count_neighbors(std::vector<char>(m, 0));
  std::vector<int> pick;
  // Enumerate all subsets of size 1..budget via lexicographic combinations.
  for (std::size_t size = 1; size <= budget && size <= static_cast<std::size_t>(m);
       ++size) {
    pick.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<int>(i);
    while (true) {
      std::vector<char> removed(m, 0);
      for (int e : pick) removed[e] = 1;
      best = std::min(best, count_neighbors(removed));
      // Next combination.
      int i = static_cast<int>(size) - 1;
      while (i >= 0 && pick[i] == m - static_cast<int>(size) + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::size_t j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return best;
}

struct ExpanderOracleResult {
  bool is_expander = true;
  std::vector<int> violating_set;  // empty when is_expander
};

// Exhaustive (eps,k)-robust-expander decision: every admissible X, every
// deletion set within the budget.
inline ExpanderOracleResult check_expander_exhaustive(
    const Graph& g, const ExpanderParams& params) {
  const int n = g.vertex_count();
  const double d = g.edge_count() == 0 ? 0.0 : g.average_degree().to_double();
  const int lo =
      std::max(1, static_cast<int>(std::ceil(params.k / 2.0 - kGuard)));
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int xs = __builtin_popcount(mask);
    if (xs < lo || 2 * xs > n) continue;
    std::vector<int> x;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) x.push_back(v);
    const double r = rho(static_cast<double>(xs), params);
    const auto budget = static_cast<std::size_t>(
        std::floor(d * r * static_cast<double>(xs) + kGuard));
    const std::size_t remaining = min_neighbors_all_deletions(g, x, budget);
    if (static_cast<double>(remaining) < r * static_cast<double>(xs) - kGuard)
      return {false, x};
  }
  return {true, {}};
}

// ---------------------------------------------------------------------------
// Crux oracle.
// ---------------------------------------------------------------------------

// Smallest |S| with d(G[S]) >= alpha * d(G), found by scanning all vertex
// subsets grouped by size, exact rational comparisons only. Returns the order
// and the first witness in (size, mask-order).
struct CruxOracleResult {
  int order = 0;
  std::vector<int> witness;
};

inline Rational induced_avg_degree(const Graph& g, std::uint32_t mask) {
  int size = 0;
  std::int64_t edges2 = 0;  // twice the edge count
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    if (!(mask >> v & 1)) continue;
    ++size;
    for (int u : g.neighbors(v))
      if (mask >> u & 1) ++edges2;
  }
  return Rational(edges2, size);
}

inline CruxOracleResult crux_exhaustive(const Graph& g, const Rational& alpha) {
  const int n = g.vertex_count();
  const Rational target = alpha * g.average_degree();
  for (int size = 1; size <= n; ++size) {
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      if (!(induced_avg_degree(g, mask) < target)) {
        std::vector<int> w;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) w.push_back(v);
        return {size, w};
      }
    }
  }
  return {n + 1, {}};  // unreachable for alpha <= 1: S = V always qualifies
}

// ---------------------------------------------------------------------------
// Expansion-profile oracle.
// ---------------------------------------------------------------------------

// min over nonempty S with |S| <= delta*n of e(S, S^c) / (d |S|), exact.
// Returns nullopt when no admissible S exists (delta * n < 1).
inline std::optional<Rational> profile_exhaustive(const Graph& g,
                                                  double delta) {
  const int n = g.vertex_count();
  const int cap = static_cast<int>(
      std::floor(delta * static_cast<double>(n) + kGuard));
  if (cap < 1) return std::nullopt;
  const Rational d = g.average_degree();
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size > cap) continue;
    std::int64_t boundary = 0;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      for (int u : g.neighbors(v))
        if (!(mask >> u & 1)) ++boundary;
    }
    Rational value = Rational(boundary) / (d * Rational(size));
    if (!best || value < *best) best = value;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Subdivision oracle.
// ---------------------------------------------------------------------------

// Second exhaustive K_t-subdivision search, organized differently from the
// library's: no degree-based core filter, no memoization, pairs processed in
// plain lexicographic order, simple paths enumerated by DFS in ascending
// neighbor order. Feasible up to n ~ 8.
namespace detail {

struct SubdivSearch {
  const Graph& g;
  std::vector<int> core;
  std::vector<char> used;  // interior vertices already consumed
  std::map<std::pair<int, int>, Path> paths;

  bool connect(std::size_t pair_index,
               const std::vector<std::pair<int, int>>& pairs) {
    if (pair_index == pairs.size()) return true;
    auto [i, j] = pairs[pair_index];
    std::vector<int> stack{core[i]};
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[core[i]] = 1;
    return dfs(core[i], core[j], stack, on_path, pair_index, pairs);
  }

  bool dfs(int at, int goal, std::vector<int>& stack,
           std::vector<char>& on_path, std::size_t pair_index,
           const std::vector<std::pair<int, int>>& pairs) {
    for (int next : g.neighbors(at)) {
      if (next == goal) {
        stack.push_back(goal);
        auto key = pairs[pair_index];
        paths[key] = Path{stack};
        std::vector<int> interior(stack.begin() + 1, stack.end() - 1);
        for (int v : interior) used[v] = 1;
        if (connect(pair_index + 1, pairs)) return true;
        for (int v : interior) used[v] = 0;
        paths.erase(key);
        stack.pop_back();
        continue;
      }
      if (on_path[next] || used[next]) continue;
      if (std::find(core.begin(), core.end(), next) != core.end()) continue;
      on_path[next] = 1;
      stack.push_back(next);
      if (dfs(next, goal, stack, on_path, pair_index, pairs)) return true;
      stack.pop_back();
      on_path[next] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Largest t <= cap such that g contains a K_t-subdivision, with a witness
// certificate. t = 1 needs one vertex; larger t searches all core sets.
inline OracleResult max_subdivision_exhaustive(const Graph& g, int cap) {
  const int n = g.vertex_count();
  for (int t = std::min(cap, n); t >= 1; --t) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) pairs.emplace_back(i, j);
    // All C(n, t) core sets in ascending lexicographic order.
    std::vector<int> pick(t);
    for (int i = 0; i < t; ++i) pick[i] = i;
    while (true) {
      detail::SubdivSearch search{g, pick, std::vector<char>(n, 0), {}};
      if (search.connect(0, pairs)) {
        SubdivisionCertificate cert;
        cert.t = t;
        cert.core = pick;
        cert.paths = std::move(search.paths);
        return {t, cert};
      }
      int i = t - 1;
      while (i >= 0 && pick[i] == n - t + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {0, std::nullopt};
}

}  // namespace crux::oracle
