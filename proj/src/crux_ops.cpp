#include "crux/crux_ops.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cmath>
#include <stdexcept>

#include "crux/rng.hpp"

namespace crux {

namespace {

// Fixed-width bitset sized at runtime; adjacency rows for the subset search
// kernels. Kept local to this translation unit.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : words_((n + 63) / 64, 0) {}
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void unset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  int and_count(const Bits& other) const {
    int total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      total += std::popcount(words_[w] & other.words_[w]);
    return total;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct DksContext {
  const std::vector<Bits>* adj;  // rows over reordered ids
  int n;
  int m;
  std::int64_t need;
  std::int64_t nodes_left;  // <0 means unbounded
  bool budget_out = false;
};

// Depth-first search over increasing positions. Returns the first subset (in
// this canonical order) of size m inducing at least `need` edges.
bool dks_search(DksContext& ctx, int pos, std::vector<int>& chosen,
                Bits& chosen_bits, std::int64_t edges,
                std::vector<int>& witness) {
  int r = ctx.m - static_cast<int>(chosen.size());
  if (r == 0) {
    if (edges >= ctx.need) {
      witness = chosen;
      return true;
    }
    return false;
  }
  if (ctx.nodes_left == 0) {
    ctx.budget_out = true;
    return false;
  }
  if (ctx.nodes_left > 0) --ctx.nodes_left;
  if (ctx.n - pos < r) return false;

  // Exact optimistic bound: current edges, a complete graph among the r
  // additions, and the r best candidate-to-chosen edge counts.
  std::vector<int> contrib(ctx.n - pos);
  for (int i = pos; i < ctx.n; ++i)
    contrib[i - pos] = (*ctx.adj)[i].and_count(chosen_bits);
  std::vector<int> top(contrib);
  std::partial_sort(top.begin(), top.begin() + r, top.end(),
                    std::greater<int>());
  std::int64_t bound =
      edges + static_cast<std::int64_t>(r) * (r - 1) / 2;
  for (int i = 0; i < r; ++i) bound += top[i];
  if (bound < ctx.need) return false;

  for (int i = pos; i <= ctx.n - r; ++i) {
    chosen.push_back(i);
    chosen_bits.set(i);
    std::int64_t gained = contrib[i - pos];
    if (dks_search(ctx, i + 1, chosen, chosen_bits, edges + gained, witness))
      return true;
    chosen.pop_back();
    chosen_bits.unset(i);
    if (ctx.budget_out) return false;
  }
  return false;
}

struct DksResult {
  enum class Status { Found, RefutedExhaustive, BudgetExceeded };
  Status status = Status::RefutedExhaustive;
  std::vector<int> witness;  // original vertex ids, sorted
};

// Is there an m-subset inducing at least need edges? Vertices are searched in
// degree-descending order, so the witness is canonical. A positive node
// budget forces the serial path and may end in BudgetExceeded.
DksResult densest_subset_decision(const Graph& g, int m, std::int64_t need,
                                  ExecMode exec, std::int64_t node_budget) {
  DksResult result;
  int n = g.vertex_count();
  if (m < 1 || m > n) return result;
  if (need <= 0) {
    std::vector<int> ids(m);
    for (int i = 0; i < m; ++i) ids[i] = i;
    result.status = DksResult::Status::Found;
    result.witness = ids;
    return result;
  }
  if (need > static_cast<std::int64_t>(m) * (m - 1) / 2) return result;

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<Bits> adj(n, Bits(n));
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  for (const auto& [u, v] : g.edges()) {
    adj[position[u]].set(position[v]);
    adj[position[v]].set(position[u]);
  }

  auto run_branch = [&](int first, std::int64_t budget, std::vector<int>& witness,
                        bool& budget_out) {
    DksContext ctx{&adj, n, m, need, budget};
    std::vector<int> chosen{first};
    Bits chosen_bits(n);
    chosen_bits.set(first);
    bool found = dks_search(ctx, first + 1, chosen, chosen_bits, 0, witness);
    budget_out = ctx.budget_out;
    return found;
  };

  int branches = n - m + 1;
  bool parallel = node_budget < 0 &&
                  use_parallel(exec, static_cast<long long>(branches) * 1024);
  int found_branch = INT_MAX;
  bool any_budget_out = false;

  if (parallel) {
#ifdef _OPENMP
    std::atomic<int> best_branch{INT_MAX};
#pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < branches; ++b) {
      if (b > best_branch.load(std::memory_order_relaxed)) continue;
      std::vector<int> witness;
      bool budget_out = false;
      if (run_branch(b, -1, witness, budget_out)) {
        int cur = best_branch.load(std::memory_order_relaxed);
        while (b < cur &&
               !best_branch.compare_exchange_weak(cur, b,
                                                  std::memory_order_relaxed)) {
        }
      }
    }
    found_branch = best_branch.load();
    if (found_branch != INT_MAX) {
      // Rerun the winning branch serially to recover the witness; cheap,
      // the branch is known to contain an early success.
      std::vector<int> witness;
      bool budget_out = false;
      run_branch(found_branch, -1, witness, budget_out);
      result.status = DksResult::Status::Found;
      for (int p : witness) result.witness.push_back(order[p]);
      std::sort(result.witness.begin(), result.witness.end());
      return result;
    }
    return result;
#endif
  }

  for (int b = 0; b < branches; ++b) {
    std::vector<int> witness;
    bool budget_out = false;
    if (run_branch(b, node_budget, witness, budget_out)) {
      result.status = DksResult::Status::Found;
      for (int p : witness) result.witness.push_back(order[p]);
      std::sort(result.witness.begin(), result.witness.end());
      return result;
    }
    if (budget_out) {
      any_budget_out = true;
      break;
    }
  }
  (void)found_branch;
  result.status = any_budget_out ? DksResult::Status::BudgetExceeded
                                 : DksResult::Status::RefutedExhaustive;
  return result;
}

std::int64_t edges_needed(const Rational& alpha, const Rational& d, int m) {
  return (alpha * d * Rational(m, 2)).ceil();
}

}  // namespace

nlohmann::json CruxReport::to_json() const {
  nlohmann::json j;
  j["mode"] = mode == Mode::Exact ? "exact" : "bounded";
  j["alpha"] = alpha.str();
  j["lower"] = lower;
  j["lower_certified"] = lower_certified;
  if (upper > 0)
    j["upper"] = upper;
  else
    j["upper"] = nullptr;
  if (witness)
    j["witness"] = witness->ids();
  else
    j["witness"] = nullptr;
  return j;
}

CruxReport crux_exact(const Graph& g, const Rational& alpha,
                      const CruxOptions& opts) {
  if (!(alpha > Rational(0)) || alpha > Rational(1))
    throw std::invalid_argument("crux: alpha outside (0,1]");
  if (g.edge_count() == 0)
    throw std::invalid_argument("crux: graph has no edges");
  if (g.vertex_count() > opts.exact_threshold && opts.size_cap == 0)
    throw std::invalid_argument(
        "crux_exact: infeasible above order threshold; use crux_bounds or a "
        "size cap");

  CruxReport report;
  report.mode = CruxReport::Mode::Exact;
  report.alpha = alpha;
  Rational d = g.average_degree();

  int n = g.vertex_count();
  int cap = opts.size_cap > 0 ? std::min(opts.size_cap, n) : n;
  for (int m = 2; m <= cap; ++m) {
    std::int64_t need = edges_needed(alpha, d, m);
    DksResult dks = densest_subset_decision(g, m, need, opts.exec, -1);
    if (dks.status == DksResult::Status::Found) {
      report.lower = m;
      report.upper = m;
      report.lower_certified = true;
      report.witness = VertexSet(dks.witness);
      return report;
    }
  }
  // Every order up to the cap is refuted. With no cap this cannot happen:
  // the whole graph reaches alpha*d for alpha <= 1.
  report.lower = cap + 1;
  report.lower_certified = true;
  return report;
}

CruxReport crux_bounds(const Graph& g, const Rational& alpha,
                       const CruxBoundsOptions& opts) {
  if (!(alpha > Rational(0)) || alpha > Rational(1))
    throw std::invalid_argument("crux: alpha outside (0,1]");
  if (g.edge_count() == 0)
    throw std::invalid_argument("crux: graph has no edges");

  CruxReport report;
  report.mode = CruxReport::Mode::Bounded;
  report.alpha = alpha;
  Rational d = g.average_degree();
  Rational target = alpha * d;
  int n = g.vertex_count();

  // Upper bound: min-degree removal order, then the smallest suffix that
  // reaches the target density, then greedy shrinking of that witness.
  std::vector<int> removal;
  {
    std::vector<std::int64_t> deg(n);
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      for (int v = 0; v < n; ++v)
        if (alive[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
      removal.push_back(pick);
      alive[pick] = 0;
      for (int w : g.neighbors(pick))
        if (alive[w]) --deg[w];
    }
  }
  std::vector<int> best_witness;
  {
    std::vector<char> added(n, 0);
    std::vector<int> suffix;
    std::int64_t edges = 0;
    for (int i = n - 1; i >= 0; --i) {
      int v = removal[i];
      for (int w : g.neighbors(v))
        if (added[w]) ++edges;
      added[v] = 1;
      suffix.push_back(v);
      int size = static_cast<int>(suffix.size());
      if (size >= 1 && Rational(2 * edges, size) >= target) {
        best_witness = suffix;
        break;
      }
    }
    if (best_witness.empty()) {
      // The full graph always qualifies for alpha <= 1.
      best_witness = removal;
    }
  }
  // Greedy shrink: drop the vertex whose removal keeps density highest while
  // the target still holds. Ties go to the lowest id.
  {
    VertexSet current(best_witness);
    while (current.size() > 2) {
      InducedSubgraph sub = induced_subgraph(g, current);
      int s = sub.graph.vertex_count();
      std::int64_t e = static_cast<std::int64_t>(sub.graph.edge_count());
      int drop = -1;
      Rational best_d(0);
      for (int i = 0; i < s; ++i) {
        Rational cand(2 * (e - sub.graph.degree(i)), s - 1);
        if (cand >= target && (drop < 0 || cand > best_d)) {
          drop = i;
          best_d = cand;
        }
      }
      if (drop < 0) break;
      current.erase(sub.to_parent[drop]);
    }
    best_witness = current.ids();
  }
  report.upper = static_cast<int>(best_witness.size());
  report.witness = VertexSet(best_witness);

  // Lower bound: ascending exhaustive scan with a node budget; stops early
  // if it actually finds a smaller witness than the peeled one.
  report.lower = 2;
  report.lower_certified = true;
  int scan_cap = std::min(opts.scan_threshold, report.upper - 1);
  for (int m = 2; m <= scan_cap; ++m) {
    std::int64_t need = edges_needed(alpha, d, m);
    DksResult dks =
        densest_subset_decision(g, m, need, ExecMode::Serial, 4'000'000);
    if (dks.status == DksResult::Status::Found) {
      report.upper = m;
      report.lower = m;
      report.witness = VertexSet(dks.witness);
      return report;
    }
    if (dks.status == DksResult::Status::BudgetExceeded) {
      report.lower = m;
      report.lower_certified = false;
      return report;
    }
    report.lower = m + 1;
  }
  if (report.lower > report.upper) report.lower = report.upper;
  return report;
}

namespace {

struct ProfileKey {
  Rational value;
  int size = 0;
  std::uint32_t mask = 0;
  bool valid = false;
};

bool profile_key_less(const ProfileKey& a, const ProfileKey& b) {
  if (!a.valid || !b.valid) return a.valid && !b.valid;
  if (a.value != b.value) return a.value < b.value;
  if (a.size != b.size) return a.size < b.size;
  std::uint32_t diff = a.mask ^ b.mask;
  if (diff == 0) return false;
  std::uint32_t low = diff & (~diff + 1);
  return (a.mask & low) != 0;
}

}  // namespace

nlohmann::json ProfileReport::to_json() const {
  nlohmann::json j;
  j["mode"] = mode == ProfileMode::Exact ? "exact" : "sampled";
  j["delta"] = delta;
  j["value"] = value.str();
  j["value_float"] = value.to_double();
  j["argmin"] = argmin.ids();
  j["sets_tested"] = sets_tested;
  return j;
}

ProfileReport expansion_profile(const Graph& g, double delta, ProfileMode mode,
                                const ProfileOptions& opts) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("expansion_profile: empty graph");
  if (g.edge_count() == 0)
    throw std::invalid_argument("expansion_profile: graph has no edges");
  // The epsilon guard keeps delta = (c-1)/n round-trips from losing the top
  // size class to floating-point dust.
  int cap = static_cast<int>(std::floor(delta * n + 1e-9));
  if (cap < 1)
    throw std::invalid_argument("expansion_profile: empty size range (delta*n < 1)");
  cap = std::min(cap, n);

  ProfileReport report;
  report.mode = mode;
  report.delta = delta;
  std::int64_t two_e = 2 * static_cast<std::int64_t>(g.edge_count());

  auto value_of = [&](const std::vector<int>& members) {
    std::size_t boundary = edge_boundary(g, VertexSet(members));
    // e(S,S^c) / (d |S|) with d = 2e/n, all exact.
    return Rational(static_cast<std::int64_t>(boundary) * n,
                    two_e * static_cast<std::int64_t>(members.size()));
  };

  if (mode == ProfileMode::Exact) {
    if (n > opts.exact_threshold)
      throw std::invalid_argument(
          "expansion_profile: exact mode infeasible above threshold");
    if (n > 25)
      throw std::invalid_argument("expansion_profile: exact mode capped at n=25");
    std::int64_t total = std::int64_t{1} << n;
    ProfileKey best;
    std::uint64_t tested = 0;

    auto consider = [&](std::uint32_t mask, ProfileKey& slot,
                        std::uint64_t& counter) {
      int size = std::popcount(mask);
      if (size < 1 || size > cap) return;
      ++counter;
      std::vector<int> members;
      for (std::uint32_t rest = mask; rest;) {
        int b = std::countr_zero(rest);
        members.push_back(b);
        rest &= rest - 1;
      }
      ProfileKey key{value_of(members), size, mask, true};
      if (profile_key_less(key, slot)) slot = key;
    };

    bool parallel = use_parallel(opts.exec, total);
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
      {
        ProfileKey local;
        std::uint64_t local_tested = 0;
#pragma omp for schedule(static)
        for (std::int64_t m = 1; m < total; ++m)
          consider(static_cast<std::uint32_t>(m), local, local_tested);
#pragma omp critical
        {
          tested += local_tested;
          if (profile_key_less(local, best)) best = local;
        }
      }
#endif
    } else {
      for (std::int64_t m = 1; m < total; ++m)
        consider(static_cast<std::uint32_t>(m), best, tested);
    }

    report.sets_tested = tested;
    report.value = best.value;
    std::vector<int> members;
    for (std::uint32_t rest = best.mask; rest;) {
      int b = std::countr_zero(rest);
      members.push_back(b);
      rest &= rest - 1;
    }
    report.argmin = VertexSet(members);
    return report;
  }

  // Sampled mode: connected BFS-grown and uniform candidate sets, stratified
  // over sizes. The result is an upper bound on the true profile.
  Rng rng(opts.seed);
  ProfileKey best;
  std::vector<int> best_members;
  Rational best_value;
  bool have_best = false;
  std::uint64_t tested = 0;
  auto consider_members = [&](std::vector<int> members) {
    if (members.empty()) return;
    ++tested;
    Rational val = value_of(members);
    if (!have_best || val < best_value) {
      have_best = true;
      best_value = val;
      best_members = std::move(members);
    }
  };
  for (int t = 0; t < opts.sample_trials; ++t) {
    int target = 1 + static_cast<int>(t % cap);
    if (t % 2 == 0) {
      // connected growth
      std::vector<char> in_set(n, 0);
      std::vector<int> members;
      std::vector<int> frontier;
      int start = static_cast<int>(rng.next_below(n));
      members.push_back(start);
      in_set[start] = 1;
      for (int w : g.neighbors(start)) frontier.push_back(w);
      while (static_cast<int>(members.size()) < target && !frontier.empty()) {
        std::size_t pick = rng.next_below(frontier.size());
        int v = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        if (in_set[v]) continue;
        in_set[v] = 1;
        members.push_back(v);
        for (int w : g.neighbors(v))
          if (!in_set[w]) frontier.push_back(w);
      }
      if (static_cast<int>(members.size()) == target) {
        std::sort(members.begin(), members.end());
        consider_members(std::move(members));
      }
    } else {
      std::vector<int> scratch(n);
      for (int i = 0; i < n; ++i) scratch[i] = i;
      for (int i = 0; i < target; ++i) {
        std::size_t j = i + rng.next_below(static_cast<std::uint64_t>(n - i));
        std::swap(scratch[i], scratch[j]);
      }
      std::vector<int> members(scratch.begin(), scratch.begin() + target);
      std::sort(members.begin(), members.end());
      consider_members(std::move(members));
    }
  }
  if (!have_best) {
    // Degenerate fallback (e.g. zero trials): report the singleton {0}.
    best_members = {0};
    best_value = value_of(best_members);
    ++tested;
  }
  report.sets_tested = tested;
  report.value = best_value;
  report.argmin = VertexSet(best_members);
  return report;
}

nlohmann::json SseReport::to_json() const {
  nlohmann::json j;
  j["crux_order"] = crux_order;
  j["delta"] = delta;
  j["phi"] = phi.str();
  j["one_minus_eps"] = one_minus_eps.str();
  j["holds"] = holds;
  return j;
}

SseReport sse_crux_consistency(const Graph& g, const Rational& eps,
                               const CruxOptions& opts) {
  SseReport report;
  CruxReport crux = crux_exact(g, eps, opts);
  report.crux_order = crux.upper;
  report.delta =
      static_cast<double>(crux.upper - 1) / g.vertex_count();
  ProfileOptions popts;
  popts.exact_threshold = std::max(opts.exact_threshold, g.vertex_count());
  ProfileReport profile =
      expansion_profile(g, report.delta, ProfileMode::Exact, popts);
  report.phi = profile.value;
  report.one_minus_eps = Rational(1) - eps;
  report.holds = report.phi > report.one_minus_eps;
  return report;
}

namespace {

Graph replicate(const Graph& g, int copies, int padding) {
  int n = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * copies);
  auto base_edges = g.edges();
  for (int c = 0; c < copies; ++c)
    for (const auto& [u, v] : base_edges)
      edges.emplace_back(c * n + u, c * n + v);
  return Graph(copies * n + padding, edges);
}

// Case 1: replicate and pad with isolated vertices until the density drops
// into the target interval. Entered only with d above the interval.
Graph gadget_case1(const Graph& g, int k, const Rational& target) {
  Rational d = g.average_degree();
  std::int64_t n = g.vertex_count();
  std::int64_t m1 = (Rational(k) * d / Rational(n)).ceil();
  if (m1 < 1) m1 = 1;
  Rational m1n(m1 * n);
  std::int64_t m2 = (m1n * (d - target) / target).ceil();
  if (m2 < 0) m2 = 0;
  return replicate(g, static_cast<int>(m1), static_cast<int>(m2));
}

}  // namespace

nlohmann::json GadgetResult::to_json() const {
  nlohmann::json j;
  j["case"] = case_used;
  j["n"] = graph.vertex_count();
  j["m"] = graph.edge_count();
  j["density"] = density.str();
  if (omega >= 0) j["omega"] = omega;
  return j;
}

GadgetResult np_gadget(const Graph& g, int k, const Rational& eps,
                       const GadgetOptions& opts) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("np_gadget: graph has no edges");
  if (k < 3 || k > g.vertex_count())
    throw std::invalid_argument("np_gadget: k outside [3, n]");
  if (!(eps > Rational(0)) || eps > Rational(1))
    throw std::invalid_argument("np_gadget: eps outside (0,1]");

  Rational d = g.average_degree();
  Rational target = Rational(k - 1) / eps;
  Rational low = Rational(static_cast<std::int64_t>(k) * k - k - 1, k) / eps;

  GadgetResult result;
  if (d > low && d <= target) {
    result.case_used = 0;
    result.graph = g;
  } else if (d > target) {
    result.case_used = 1;
    result.graph = gadget_case1(g, k, target);
  } else {
    // Cross-matched copies raise the density by exactly one per copy pair:
    // 2m copies, with copy i <= m < j joined by a perfect matching on
    // corresponding vertices. Cliques of size >= 3 cannot straddle copies.
    result.case_used = 2;
    std::int64_t m = (target - d).ceil();
    if (m < 1) m = 1;
    int n = g.vertex_count();
    std::vector<Edge> edges;
    auto base_edges = g.edges();
    for (int c = 0; c < 2 * m; ++c)
      for (const auto& [u, v] : base_edges)
        edges.emplace_back(c * n + u, c * n + v);
    for (int i = 0; i < m; ++i)
      for (int j = static_cast<int>(m); j < 2 * m; ++j)
        for (int v = 0; v < n; ++v)
          edges.emplace_back(i * n + v, j * n + v);
    Graph doubled(static_cast<int>(2 * m) * n, edges);
    if (doubled.average_degree() == target) {
      result.graph = doubled;
    } else {
      result.graph = gadget_case1(doubled, k, target);
    }
  }

  result.density = result.graph.average_degree();
  if (!(result.density > low && result.density <= target))
    throw std::logic_error("np_gadget: output density missed the target interval");
  if (result.graph.vertex_count() <= opts.omega_assert_threshold) {
    result.omega = max_clique_size(result.graph);
    if (result.omega != max_clique_size(g))
      throw std::logic_error("np_gadget: clique number not preserved");
  }
  return result;
}

namespace {

// Tomita-style expansion: color once per call, then branch from the highest
// color downward. class index + 1 bounds the clique extension size.
void clique_expand(const std::vector<Bits>& adj,
                   const std::vector<int>& candidates, int depth, int& best) {
  if (candidates.empty()) return;
  std::vector<std::vector<int>> class_members;
  for (int v : candidates) {
    std::size_t c = 0;
    for (; c < class_members.size(); ++c) {
      bool clash = false;
      for (int u : class_members[c])
        if (adj[v].test(u)) {
          clash = true;
          break;
        }
      if (!clash) break;
    }
    if (c == class_members.size()) class_members.push_back({});
    class_members[c].push_back(v);
  }
  std::vector<int> sorted;
  std::vector<int> color;
  sorted.reserve(candidates.size());
  for (std::size_t c = 0; c < class_members.size(); ++c)
    for (int v : class_members[c]) {
      sorted.push_back(v);
      color.push_back(static_cast<int>(c) + 1);
    }
  for (int idx = static_cast<int>(sorted.size()) - 1; idx >= 0; --idx) {
    if (depth + color[idx] <= best) return;  // colors ascend with idx
    int v = sorted[idx];
    std::vector<int> next;
    for (int i = 0; i < idx; ++i)
      if (adj[v].test(sorted[i])) next.push_back(sorted[i]);
    if (next.empty())
      best = std::max(best, depth + 1);
    else
      clique_expand(adj, next, depth + 1, best);
  }
}

}  // namespace

int max_clique_size(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<Bits> adj(n, Bits(n));
  for (const auto& [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  std::vector<int> candidates(n);
  for (int i = 0; i < n; ++i) candidates[i] = i;
  // Degree-descending start order helps the coloring bound.
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  int best = 0;
  clique_expand(adj, candidates, 0, best);
  return best;
}

}  // namespace crux
