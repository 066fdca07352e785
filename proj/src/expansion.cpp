#include "crux/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "crux/rng.hpp"

namespace crux {

namespace {

// Pinned floating-point conventions for the rho-threshold comparisons. The
// deletion budget rounds down with a dust guard; a neighborhood refutes only
// when it falls below the threshold by more than the same guard.
constexpr double kFpGuard = 1e-12;

std::size_t deletion_budget(double avg_degree, double rho_x, int set_size) {
  double raw = avg_degree * rho_x * static_cast<double>(set_size);
  if (raw <= 0.0) return 0;
  return static_cast<std::size_t>(std::floor(raw + kFpGuard));
}

bool below_threshold(std::size_t remaining, double need) {
  return static_cast<double>(remaining) < need - kFpGuard;
}

}  // namespace

ExpanderParams::ExpanderParams(double eps_in, double k_in)
    : eps(eps_in), k(k_in) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::invalid_argument("expander params: eps outside (0,1)");
  if (!(k >= 1.0)) throw std::invalid_argument("expander params: k below 1");
  // Normalization: integral of rho(x)/x over [1, inf) must stay below 1/8.
  // Trapezoid in u = ln x over 40 log-units plus the exact analytic tail
  // eps / ln(15 x / k) evaluated at the cutoff.
  double lower = std::max(1.0, k / 5.0);
  const int steps = 4000;
  const double span = 40.0;
  double u0 = std::log(lower);
  double h = span / steps;
  double sum = 0.0;
  for (int i = 0; i <= steps; ++i) {
    double x = std::exp(u0 + i * h);
    double l = std::log(15.0 * x / k);
    double f = eps / (l * l);
    sum += (i == 0 || i == steps) ? f / 2.0 : f;
  }
  double integral = sum * h;
  double l_cut = std::log(15.0 * std::exp(u0 + span) / k);
  integral += eps / l_cut;
  if (!(integral < 0.125))
    throw std::invalid_argument(
        "expander params: normalization integral reaches 1/8 (eps too large "
        "for this k)");
}

double rho(double x, const ExpanderParams& params) {
  if (!(x > 0.0)) throw std::invalid_argument("rho: x must be positive");
  if (x < params.k / 5.0) return 0.0;
  double l = std::log(15.0 * x / params.k);
  return params.eps / (l * l);
}

DeletionResult min_neighborhood_under_deletion(const Graph& g,
                                               const VertexSet& x,
                                               std::size_t budget) {
  std::vector<char> in_x(g.vertex_count(), 0);
  for (int v : x) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("min_neighborhood_under_deletion: bad vertex id");
    in_x[v] = 1;
  }
  // cost of a neighbor = number of edges tying it to X; removing all of them
  // removes the neighbor. Cheapest-first is optimal because neighbors are
  // independent: each deleted edge contributes to exactly one neighbor.
  std::vector<std::pair<int, int>> costs;  // (cost, neighbor id)
  std::vector<int> cost_of(g.vertex_count(), 0);
  std::vector<int> neighbor_ids;
  for (int v : x)
    for (int w : g.neighbors(v))
      if (!in_x[w]) {
        if (cost_of[w] == 0) neighbor_ids.push_back(w);
        ++cost_of[w];
      }
  costs.reserve(neighbor_ids.size());
  for (int w : neighbor_ids) costs.emplace_back(cost_of[w], w);
  std::sort(costs.begin(), costs.end());

  DeletionResult result;
  std::size_t spent = 0;
  std::size_t removed = 0;
  for (const auto& [cost, w] : costs) {
    if (spent + static_cast<std::size_t>(cost) > budget) break;
    spent += static_cast<std::size_t>(cost);
    ++removed;
    for (int v : g.neighbors(w))
      if (in_x[v])
        result.deleted.emplace_back(std::min(v, w), std::max(v, w));
  }
  result.remaining_neighbors = costs.size() - removed;
  return result;
}

namespace {

// Violation test for one candidate set; shared by the exact scan, the sampled
// scan, and the extraction loop.
struct SetViolation {
  std::vector<int> members;
  std::vector<Edge> deleted;
};

std::optional<SetViolation> test_set(const Graph& g, double avg_degree,
                                     const ExpanderParams& params,
                                     const std::vector<int>& members) {
  int xs = static_cast<int>(members.size());
  double r = rho(static_cast<double>(xs), params);
  double need = r * static_cast<double>(xs);
  if (need <= 0.0) return std::nullopt;
  std::size_t budget = deletion_budget(avg_degree, r, xs);
  DeletionResult del =
      min_neighborhood_under_deletion(g, VertexSet(members), budget);
  if (below_threshold(del.remaining_neighbors, need))
    return SetViolation{members, std::move(del.deleted)};
  return std::nullopt;
}

std::vector<int> mask_members(std::uint32_t mask) {
  std::vector<int> out;
  while (mask) {
    int b = std::countr_zero(mask);
    out.push_back(b);
    mask &= mask - 1;
  }
  return out;
}

// Lexicographic order on equal-size masks read as ascending id lists: the
// mask owning the lowest differing bit is the smaller list.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  std::uint32_t diff = a ^ b;
  std::uint32_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

struct WitnessKey {
  int size = 0;
  std::uint32_t mask = 0;
  bool valid = false;
};

bool key_less(const WitnessKey& a, const WitnessKey& b) {
  if (!a.valid || !b.valid) return a.valid && !b.valid;
  if (a.size != b.size) return a.size < b.size;
  return mask_lex_less(a.mask, b.mask);
}

ExpanderCheckResult exact_check(const Graph& g, const ExpanderParams& params,
                                const ExpanderCheckOptions& opts) {
  int n = g.vertex_count();
  if (n > opts.exact_threshold)
    throw std::invalid_argument(
        "check_robust_expander: exact mode infeasible above threshold n=" +
        std::to_string(opts.exact_threshold));
  if (n > 25)
    throw std::invalid_argument("check_robust_expander: exact mode capped at n=25");

  ExpanderCheckResult result;
  result.mode = CheckMode::Exact;
  int lo = std::max(1, static_cast<int>(std::ceil(params.k / 2.0 - kFpGuard)));
  int hi = n / 2;
  if (lo > hi) {
    // The quantifier range is empty; nothing can refute.
    result.verdict = ExpanderCheckResult::Verdict::Certified;
    return result;
  }

  double d = g.average_degree().to_double();
  std::int64_t total = std::int64_t{1} << n;
  WitnessKey best;
  std::uint64_t tested = 0;

  if (use_parallel(opts.exec, total)) {
#ifdef _OPENMP
#pragma omp parallel
    {
      WitnessKey local;
      std::uint64_t local_tested = 0;
#pragma omp for schedule(static)
      for (std::int64_t m = 1; m < total; ++m) {
        auto mask = static_cast<std::uint32_t>(m);
        int size = std::popcount(mask);
        if (size < lo || size > hi) continue;
        ++local_tested;
        if (test_set(g, d, params, mask_members(mask))) {
          WitnessKey key{size, mask, true};
          if (key_less(key, local)) local = key;
        }
      }
#pragma omp critical
      {
        tested += local_tested;
        if (key_less(local, best)) best = local;
      }
    }
#endif
  } else {
    for (std::int64_t m = 1; m < total; ++m) {
      auto mask = static_cast<std::uint32_t>(m);
      int size = std::popcount(mask);
      if (size < lo || size > hi) continue;
      ++tested;
      if (test_set(g, d, params, mask_members(mask))) {
        WitnessKey key{size, mask, true};
        if (key_less(key, best)) best = key;
      }
    }
  }

  result.sets_tested = tested;
  if (!best.valid) {
    result.verdict = ExpanderCheckResult::Verdict::Certified;
    return result;
  }
  auto violation = test_set(g, d, params, mask_members(best.mask));
  result.verdict = ExpanderCheckResult::Verdict::Refuted;
  result.violating_set = VertexSet(violation->members);
  result.deleted_edges = std::move(violation->deleted);
  return result;
}

ExpanderCheckResult sampled_check(const Graph& g, const ExpanderParams& params,
                                  const ExpanderCheckOptions& opts) {
  int n = g.vertex_count();
  ExpanderCheckResult result;
  result.mode = CheckMode::Sampled;
  int lo = std::max(1, static_cast<int>(std::ceil(params.k / 2.0 - kFpGuard)));
  int hi = n / 2;
  if (lo > hi) {
    result.verdict = ExpanderCheckResult::Verdict::Certified;
    return result;
  }

  double d = g.average_degree().to_double();
  Rng rng(opts.seed);
  int classes = hi - lo + 1;
  std::int64_t per_kind = static_cast<std::int64_t>(opts.sample_multiplier) * n;
  std::vector<int> scratch(n);

  auto finish_refuted = [&](SetViolation&& violation) {
    result.verdict = ExpanderCheckResult::Verdict::Refuted;
    result.violating_set = VertexSet(violation.members);
    result.deleted_edges = std::move(violation.deleted);
  };

  // Connected candidates: random BFS-style growth, one frontier vertex at a
  // time. Stratified round-robin over the size classes.
  for (std::int64_t t = 0; t < per_kind; ++t) {
    int target = lo + static_cast<int>(t % classes);
    std::vector<int> members;
    std::vector<char> in_set(n, 0);
    std::vector<int> frontier;
    int start = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
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
    if (static_cast<int>(members.size()) != target) continue;
    std::sort(members.begin(), members.end());
    ++result.sets_tested;
    if (auto violation = test_set(g, d, params, members)) {
      finish_refuted(std::move(*violation));
      return result;
    }
  }

  // Uniform candidates via partial Fisher-Yates.
  for (std::int64_t t = 0; t < per_kind; ++t) {
    int target = lo + static_cast<int>(t % classes);
    for (int i = 0; i < n; ++i) scratch[i] = i;
    for (int i = 0; i < target; ++i) {
      std::size_t j =
          i + rng.next_below(static_cast<std::uint64_t>(n - i));
      std::swap(scratch[i], scratch[j]);
    }
    std::vector<int> members(scratch.begin(), scratch.begin() + target);
    std::sort(members.begin(), members.end());
    ++result.sets_tested;
    if (auto violation = test_set(g, d, params, members)) {
      finish_refuted(std::move(*violation));
      return result;
    }
  }

  result.verdict = ExpanderCheckResult::Verdict::SampledPass;
  return result;
}

}  // namespace

nlohmann::json ExpanderCheckResult::to_json() const {
  nlohmann::json j;
  switch (verdict) {
    case Verdict::Certified: j["verdict"] = "certified"; break;
    case Verdict::Refuted: j["verdict"] = "refuted"; break;
    case Verdict::SampledPass: j["verdict"] = "sampled-pass"; break;
  }
  j["mode"] = mode == CheckMode::Exact ? "exact" : "sampled";
  j["sets_tested"] = sets_tested;
  if (violating_set) {
    j["violating_set"] = violating_set->ids();
    nlohmann::json edges_json = nlohmann::json::array();
    for (const auto& [u, v] : deleted_edges)
      edges_json.push_back(nlohmann::json::array({u, v}));
    j["deleted_edges"] = std::move(edges_json);
  }
  return j;
}

ExpanderCheckResult check_robust_expander(const Graph& g,
                                          const ExpanderParams& params,
                                          const ExpanderCheckOptions& opts) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("check_robust_expander: empty graph");
  if (opts.mode == CheckMode::Exact) return exact_check(g, params, opts);
  return sampled_check(g, params, opts);
}

bool refutation_is_valid(const Graph& g, const ExpanderParams& params,
                         const VertexSet& x, const std::vector<Edge>& f) {
  int n = g.vertex_count();
  int xs = x.size();
  if (xs == 0) return false;
  if (2.0 * xs < params.k - kFpGuard || 2 * xs > n) return false;
  double r = rho(static_cast<double>(xs), params);
  double d = g.average_degree().to_double();
  if (f.size() > deletion_budget(d, r, xs)) return false;
  // neighborhood of X once F is gone
  std::vector<char> in_x(n, 0);
  for (int v : x) in_x[v] = 1;
  std::vector<std::vector<int>> removed(n);
  for (const auto& [u, v] : f) {
    if (!g.has_edge(u, v)) return false;
    removed[u].push_back(v);
    removed[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (int v : x)
    for (int w : g.neighbors(v)) {
      if (in_x[w] || seen[w]) continue;
      const auto& gone = removed[v];
      if (std::find(gone.begin(), gone.end(), w) != gone.end()) continue;
      seen[w] = 1;
      ++count;
    }
  return below_threshold(count, r * static_cast<double>(xs));
}

InducedSubgraph peel_to_min_degree(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("peel_to_min_degree: graph has no edges");
  int n = g.vertex_count();
  std::vector<char> alive(n, 1);
  std::vector<std::int64_t> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::int64_t edges = static_cast<std::int64_t>(g.edge_count());
  std::int64_t alive_count = n;

  // Batch-remove everything below half the current average, then recompute.
  // Every removed vertex has deg < e/n at removal time, so the average can
  // only go up; at least one vertex always survives.
  while (true) {
    std::vector<int> drop;
    for (int v = 0; v < n; ++v)
      if (alive[v] && deg[v] * alive_count < edges) drop.push_back(v);
    if (drop.empty()) break;
    for (int v : drop) {
      alive[v] = 0;
      --alive_count;
      for (int w : g.neighbors(v))
        if (alive[w]) {
          --deg[w];
          --edges;
        }
      deg[v] = 0;
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (alive[v]) keep.push_back(v);
  return induced_subgraph(g, VertexSet(keep));
}

ExtractResult extract_robust_expander(const Graph& g,
                                      const ExpanderParams& params,
                                      const ExtractOptions& opts) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("extract_robust_expander: graph has no edges");
  Rational target = g.average_degree() / Rational(2);

  InducedSubgraph current = peel_to_min_degree(g);
  ExtractResult result;
  result.status = ExtractResult::Status::Stuck;
  int cap = opts.iteration_cap_multiplier * std::max(1, g.vertex_count());

  for (int iter = 0;; ++iter) {
    result.iterations = iter;
    if (iter >= cap) {
      result.status = ExtractResult::Status::IterationCap;
      break;
    }
    ExpanderCheckOptions check_opts = opts.check;
    check_opts.mode = current.graph.vertex_count() <= check_opts.exact_threshold
                          ? CheckMode::Exact
                          : CheckMode::Sampled;
    check_opts.seed = derive_seed(opts.check.seed, static_cast<std::uint64_t>(iter));
    ExpanderCheckResult check = check_robust_expander(current.graph, params, check_opts);
    result.sets_tested += check.sets_tested;
    if (check.verdict != ExpanderCheckResult::Verdict::Refuted) {
      result.status = check.verdict == ExpanderCheckResult::Verdict::Certified
                          ? ExtractResult::Status::Certified
                          : ExtractResult::Status::SampledPass;
      break;
    }

    // Descend into whichever side of the violating set keeps the average
    // degree guarantee: X with its whole neighborhood, or the rest. Taking
    // the denser side is what makes the d(H) >= d(G)/2 postcondition hold by
    // construction; a violating X has a thin boundary, so at least one side
    // is usually dense enough.
    const VertexSet& x = *check.violating_set;
    VertexSet closure = x.set_union(external_neighborhood(current.graph, x));
    VertexSet all_ids;
    {
      std::vector<int> ids(current.graph.vertex_count());
      for (int i = 0; i < current.graph.vertex_count(); ++i) ids[i] = i;
      all_ids = VertexSet(std::move(ids));
    }
    VertexSet rest = all_ids.set_minus(x);

    std::optional<InducedSubgraph> next;
    Rational next_degree(0);
    for (const VertexSet* side : {&closure, &rest}) {
      if (side->size() == 0 || side->size() >= current.graph.vertex_count())
        continue;
      InducedSubgraph sub = induced_subgraph(current.graph, *side);
      if (sub.graph.edge_count() == 0) continue;
      InducedSubgraph peeled = peel_to_min_degree(sub.graph);
      Rational degree = peeled.graph.average_degree();
      if (degree < target) continue;
      if (!next || next_degree < degree) {
        peeled.to_parent = compose_maps(sub.to_parent, peeled.to_parent);
        peeled.to_parent = compose_maps(current.to_parent, peeled.to_parent);
        next = std::move(peeled);
        next_degree = degree;
      }
    }
    if (!next) {
      result.status = ExtractResult::Status::Stuck;
      break;
    }
    current = std::move(*next);
  }

  result.subgraph = std::move(current);
  return result;
}

VertexSet ball(const Graph& g, const VertexSet& x, int r,
               const VertexSet& avoid) {
  if (r < 0) throw std::invalid_argument("ball: negative radius");
  if (!x.set_intersect(avoid).empty())
    throw std::invalid_argument("ball: center set meets the avoid set");
  int n = g.vertex_count();
  std::vector<char> avoided(n, 0);
  for (int v : avoid) {
    if (v < 0 || v >= n) throw std::out_of_range("ball: bad vertex id in avoid");
    avoided[v] = 1;
  }
  std::vector<char> seen(n, 0);
  std::vector<int> members;
  std::vector<int> layer;
  for (int v : x) {
    if (v < 0 || v >= n) throw std::out_of_range("ball: bad vertex id in set");
    if (!seen[v]) {
      seen[v] = 1;
      members.push_back(v);
      layer.push_back(v);
    }
  }
  for (int depth = 0; depth < r && !layer.empty(); ++depth) {
    std::vector<int> next;
    for (int v : layer)
      for (int w : g.neighbors(v))
        if (!seen[w] && !avoided[w]) {
          seen[w] = 1;
          members.push_back(w);
          next.push_back(w);
        }
    layer = std::move(next);
  }
  return VertexSet(std::move(members));
}

std::optional<Path> short_path(const Graph& g, const VertexSet& x,
                               const VertexSet& y, const VertexSet& w) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("short_path: endpoint sets must be nonempty");
  if (!w.set_intersect(x).empty() || !w.set_intersect(y).empty())
    throw std::invalid_argument("short_path: avoid set meets an endpoint set");

  VertexSet overlap = x.set_intersect(y);
  if (!overlap.empty()) return Path{{overlap.ids().front()}};

  int n = g.vertex_count();
  std::vector<char> blocked(n, 0);
  for (int v : w) {
    if (v < 0 || v >= n) throw std::out_of_range("short_path: bad avoid id");
    blocked[v] = 1;
  }
  std::vector<char> target(n, 0);
  for (int v : y) {
    if (v < 0 || v >= n) throw std::out_of_range("short_path: bad target id");
    target[v] = 1;
  }
  std::vector<int> parent(n, -1);
  std::vector<char> seen(n, 0);

  // Layered BFS with each layer processed in ascending id order, so every
  // vertex gets the smallest possible parent and the final path is the
  // lexicographically least among shortest ones.
  std::vector<int> layer;
  for (int v : x) {
    if (v < 0 || v >= n) throw std::out_of_range("short_path: bad source id");
    seen[v] = 1;
    layer.push_back(v);
  }
  std::sort(layer.begin(), layer.end());

  while (!layer.empty()) {
    std::vector<int> next;
    for (int v : layer)
      for (int u : g.neighbors(v))
        if (!seen[u] && !blocked[u]) {
          seen[u] = 1;
          parent[u] = v;
          next.push_back(u);
        }
    std::sort(next.begin(), next.end());
    int hit = -1;
    for (int u : next)
      if (target[u]) {
        hit = u;
        break;
      }
    if (hit >= 0) {
      std::vector<int> vertices;
      for (int v = hit; v != -1; v = parent[v]) vertices.push_back(v);
      std::reverse(vertices.begin(), vertices.end());
      return Path{std::move(vertices)};
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

namespace {

void check_group_shapes(const std::vector<VertexSet>& groups,
                        const std::vector<VertexSet>& avoid_each) {
  if (groups.size() != avoid_each.size())
    throw std::invalid_argument("expanding family: groups and avoid sets differ in count");
  if (groups.empty())
    throw std::invalid_argument("expanding family: no groups");
}

// Hypotheses shared by the family-selection lemma and its corollary. The
// expansion property of g itself (every mid-size set expands by rho) is the
// caller's responsibility; it is what the surrounding pipeline establishes by
// construction and is too expensive to re-check here.
std::vector<std::string> family_hypothesis_violations(
    const ExpansionRange& range, const std::vector<VertexSet>& groups,
    const VertexSet& w, const std::vector<VertexSet>& avoid_each, int k, int r,
    int x) {
  std::vector<std::string> out;
  int q = static_cast<int>(groups.size());
  for (int i = 0; i < q; ++i) {
    if (groups[i].size() < x)
      out.push_back("A1: group " + std::to_string(i) + " smaller than x");
    if (static_cast<double>(avoid_each[i].size()) > range.rho * x / 4.0)
      out.push_back("A1: avoid set " + std::to_string(i) +
                    " larger than rho*x/4");
    if (!groups[i].set_intersect(avoid_each[i]).empty())
      out.push_back("A2: group " + std::to_string(i) + " meets its avoid set");
    if (!groups[i].set_intersect(w).empty())
      out.push_back("A2: group " + std::to_string(i) +
                    " meets the common avoid set");
  }
  // Union lower bound over index sets of size k..3k. Pairwise disjointness
  // plus A1 implies it; otherwise verify exhaustively when q is small.
  bool pairwise_disjoint = true;
  for (int i = 0; i < q && pairwise_disjoint; ++i)
    for (int j = i + 1; j < q; ++j)
      if (!groups[i].set_intersect(groups[j]).empty()) {
        pairwise_disjoint = false;
        break;
      }
  if (!pairwise_disjoint) {
    if (q <= 20) {
      for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
        int size = std::popcount(mask);
        if (size < k || size > 3 * k) continue;
        VertexSet u;
        for (int i = 0; i < q; ++i)
          if (mask & (1u << i)) u = u.set_union(groups[i]);
        if (u.size() < size * x) {
          out.push_back("A3: union bound fails for an index set of size " +
                        std::to_string(size));
          break;
        }
      }
    } else {
      out.push_back("A3: union bound not verifiable (groups overlap, q too large)");
    }
  }
  if (q <= 2 * k * r) out.push_back("size: q not above 2*k*r");
  double kx = static_cast<double>(k) * x;
  if (kx < range.a) out.push_back("range: k*x below a");
  if (!(kx < range.b / 20.0)) out.push_back("range: k*x not below b/20");
  if (static_cast<double>(w.size()) > range.rho * kx / 2.0)
    out.push_back("W: common avoid set larger than rho*k*x/2");
  if (static_cast<double>(k) < std::pow(1.0 + range.rho / 4.0, r))
    out.push_back("growth: k below (1+rho/4)^r");
  return out;
}

}  // namespace

FamilySelection select_expanding_family(
    const Graph& g, const ExpansionRange& range,
    const std::vector<VertexSet>& groups, const VertexSet& w,
    const std::vector<VertexSet>& avoid_each, int k, int r, int x) {
  check_group_shapes(groups, avoid_each);
  FamilySelection result;
  result.hypothesis_violations =
      family_hypothesis_violations(range, groups, w, avoid_each, k, r, x);
  result.hypotheses_hold = result.hypothesis_violations.empty();

  double goal = std::pow(1.0 + range.rho / 4.0, r) * static_cast<double>(x);
  int q = static_cast<int>(groups.size());
  for (int j = 0; j < q; ++j) {
    VertexSet avoid = w.set_union(avoid_each[j]).set_minus(groups[j]);
    VertexSet b = ball(g, groups[j], r, avoid);
    if (static_cast<double>(b.size()) >= goal - kFpGuard)
      result.selected.push_back(j);
  }
  if (result.hypotheses_hold &&
      static_cast<int>(result.selected.size()) < q - 2 * k * r)
    throw std::logic_error(
        "select_expanding_family: conclusion failed despite hypotheses; the "
        "expansion range passed in is likely overstated for this graph");
  return result;
}

LargeBallResult find_large_ball_index(const Graph& g,
                                      const ExpansionRange& range,
                                      const std::vector<VertexSet>& groups,
                                      const VertexSet& w,
                                      const std::vector<VertexSet>& avoid_each,
                                      double threshold, int r,
                                      LargeBallMode mode, int x) {
  check_group_shapes(groups, avoid_each);
  LargeBallResult result;
  int q = static_cast<int>(groups.size());

  if (mode == LargeBallMode::CollectiveGrowth) {
    double k_eff = threshold > 0 && x > 0 ? 2.0 * threshold / x : 1.0;
    int k_int = std::max(1, static_cast<int>(std::llround(k_eff)));
    result.hypothesis_violations = family_hypothesis_violations(
        range, groups, w, avoid_each, k_int, r, x);
    if (range.rho > 0.0) {
      if (static_cast<double>(q) <=
          20.0 * k_eff * std::log(std::max(2.0, k_eff)) / range.rho)
        result.hypothesis_violations.push_back(
            "size: q not above 20*k*log(k)/rho");
      if (static_cast<double>(r) <
          10.0 * std::log(std::max(2.0, k_eff)) / range.rho)
        result.hypothesis_violations.push_back(
            "radius: r below 10*log(k)/rho");
    }
  } else {
    // Thin-layer hypotheses.
    double qx = static_cast<double>(q) * x;
    if (qx < range.a)
      result.hypothesis_violations.push_back("range: q*x below a");
    if (qx > range.b / 4.0)
      result.hypothesis_violations.push_back("range: q*x above b/4");
    if (static_cast<double>(w.size()) > range.rho * qx / 2.0)
      result.hypothesis_violations.push_back(
          "W: common avoid set larger than rho*q*x/2");
    for (int i = 0; i < q; ++i) {
      if (groups[i].size() < x)
        result.hypothesis_violations.push_back(
            "A1: group " + std::to_string(i) + " smaller than x");
      for (int j = i + 1; j < q; ++j)
        if (!groups[i].set_intersect(groups[j]).empty()) {
          result.hypothesis_violations.push_back(
              "disjoint: groups " + std::to_string(i) + " and " +
              std::to_string(j) + " overlap");
        }
    }
  }

  for (int i = 0; i < q; ++i) {
    if (mode == LargeBallMode::ThinLayers) {
      // Grow layer by layer so the per-layer avoid-set thinness can be
      // checked along the way. The fresh neighborhood is rescanned from the
      // whole ball each round: blocked avoid-set vertices stay adjacent and
      // must keep counting against the layer budget.
      int n = g.vertex_count();
      std::vector<char> in_w(n, 0);
      for (int v : w) in_w[v] = 1;
      std::vector<char> in_wi(n, 0);
      for (int v : avoid_each[i]) in_wi[v] = 1;
      std::vector<char> in_ball(n, 0);
      std::vector<int> ball_list;
      for (int v : groups[i])
        if (!in_ball[v]) {
          in_ball[v] = 1;
          ball_list.push_back(v);
        }
      bool grew = true;
      for (int depth = 1; depth <= r && grew; ++depth) {
        std::vector<char> seen_fresh(n, 0);
        std::vector<int> fresh;
        for (int v : ball_list)
          for (int u : g.neighbors(v))
            if (!in_ball[u] && !in_w[u] && !seen_fresh[u]) {
              seen_fresh[u] = 1;
              fresh.push_back(u);
            }
        int thin_hits = 0;
        for (int u : fresh)
          if (in_wi[u]) ++thin_hits;
        double thin_budget =
            depth * static_cast<double>(x) * range.rho * range.rho / 40.0;
        if (static_cast<double>(thin_hits) > thin_budget)
          result.hypothesis_violations.push_back(
              "thin-layer: avoid set " + std::to_string(i) +
              " too thick at layer " + std::to_string(depth));
        grew = false;
        for (int u : fresh)
          if (!in_wi[u]) {
            in_ball[u] = 1;
            ball_list.push_back(u);
            grew = true;
          }
      }
      if (static_cast<double>(ball_list.size()) >= threshold - kFpGuard) {
        result.index = i;
        result.ball_size = static_cast<int>(ball_list.size());
        return result;
      }
    } else {
      VertexSet avoid = w.set_union(avoid_each[i]).set_minus(groups[i]);
      VertexSet b = ball(g, groups[i], r, avoid);
      if (static_cast<double>(b.size()) >= threshold - kFpGuard) {
        result.index = i;
        result.ball_size = b.size();
        return result;
      }
    }
  }
  return result;
}

DeletedDegreeReport deleted_avg_degree_bound(const Graph& g,
                                             const ExpanderParams& params,
                                             const VertexSet& w) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("deleted_avg_degree_bound: empty graph");
  double rho_n = rho(static_cast<double>(n), params);
  double d = g.average_degree().to_double();

  DeletedDegreeReport report;
  report.precondition_ok =
      static_cast<double>(w.size()) <= rho_n * n / 20.0 + kFpGuard;
  report.bound = rho_n * d / 20.0;

  std::vector<int> keep;
  std::vector<char> in_w(n, 0);
  for (int v : w) in_w[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!in_w[v]) keep.push_back(v);
  if (keep.empty()) {
    report.actual = Rational(0);
    report.holds = false;
    return report;
  }
  InducedSubgraph rest = induced_subgraph(g, VertexSet(keep));
  report.actual = rest.graph.vertex_count() > 0 ? rest.graph.average_degree()
                                                : Rational(0);
  report.holds = report.actual.to_double() >= report.bound - kFpGuard;
  return report;
}

}  // namespace crux
