#include "crux/subdivision.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "crux/expansion.hpp"
#include "crux/rational.hpp"

namespace crux {

nlohmann::json SubdivisionCertificate::to_json() const {
  nlohmann::json j;
  j["t"] = t;
  j["core"] = core;
  nlohmann::json paths_json = nlohmann::json::object();
  for (const auto& [key, path] : paths) {
    std::string name =
        std::to_string(key.first) + "-" + std::to_string(key.second);
    paths_json[name] = path.vertices;
  }
  j["paths"] = paths_json;
  return j;
}

SubdivisionCertificate SubdivisionCertificate::from_json(
    const nlohmann::json& j) {
  SubdivisionCertificate cert;
  cert.t = j.at("t").get<int>();
  cert.core = j.at("core").get<std::vector<int>>();
  for (const auto& [name, value] : j.at("paths").items()) {
    auto dash = name.find('-');
    if (dash == std::string::npos)
      throw std::invalid_argument("certificate: bad path key '" + name + "'");
    int a = std::stoi(name.substr(0, dash));
    int b = std::stoi(name.substr(dash + 1));
    Path path;
    path.vertices = value.get<std::vector<int>>();
    cert.paths[{a, b}] = path;
  }
  return cert;
}

nlohmann::json VerificationResult::to_json() const {
  nlohmann::json j;
  j["ok"] = ok;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& v : violations)
    list.push_back({{"code", v.code}, {"message", v.message}});
  j["violations"] = list;
  return j;
}

VerificationResult verify_subdivision(const Graph& g,
                                      const SubdivisionCertificate& cert) {
  VerificationResult result;
  auto add = [&](const std::string& code, const std::string& message) {
    result.violations.push_back({code, message});
  };

  int n = g.vertex_count();
  if (cert.t != static_cast<int>(cert.core.size()))
    add("core_size_mismatch",
        "t=" + std::to_string(cert.t) + " but core lists " +
            std::to_string(cert.core.size()) + " vertices");
  bool core_valid = true;
  for (int v : cert.core)
    if (v < 0 || v >= n) {
      add("core_out_of_range", "core vertex " + std::to_string(v));
      core_valid = false;
    }
  {
    std::vector<int> sorted = cert.core;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      add("core_duplicate", "core vertex " + std::to_string(*dup) + " repeats");
      core_valid = false;
    }
  }

  int t = static_cast<int>(cert.core.size());
  // Pair coverage: exactly one path per unordered index pair.
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (!cert.paths.count({i, j}))
        add("missing_path",
            "no path for pair " + std::to_string(i) + "-" + std::to_string(j));
  for (const auto& [key, path] : cert.paths) {
    (void)path;
    if (key.first < 0 || key.second <= key.first || key.second >= t)
      add("bad_pair", "path key " + std::to_string(key.first) + "-" +
                          std::to_string(key.second) + " is not a valid pair");
  }
  if (!core_valid) {
    result.ok = result.violations.empty();
    return result;
  }

  // Path-level checks plus global internal-disjointness bookkeeping.
  std::map<int, std::pair<int, int>> interior_owner;
  std::vector<char> is_core(n, 0);
  for (int v : cert.core) is_core[v] = 1;
  for (const auto& [key, path] : cert.paths) {
    if (key.first < 0 || key.second <= key.first || key.second >= t) continue;
    std::string pair_name =
        std::to_string(key.first) + "-" + std::to_string(key.second);
    const auto& vs = path.vertices;
    if (vs.size() < 2) {
      add("empty_path", "path " + pair_name + " has fewer than two vertices");
      continue;
    }
    bool in_range = true;
    for (int v : vs)
      if (v < 0 || v >= n) {
        add("vertex_out_of_range",
            "path " + pair_name + " contains vertex " + std::to_string(v));
        in_range = false;
      }
    if (!in_range) continue;
    int a = cert.core[key.first];
    int b = cert.core[key.second];
    bool forward = vs.front() == a && vs.back() == b;
    bool backward = vs.front() == b && vs.back() == a;
    if (!forward && !backward)
      add("bad_endpoints", "path " + pair_name + " runs " +
                               std::to_string(vs.front()) + ".." +
                               std::to_string(vs.back()) +
                               " instead of joining its two core vertices");
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
      if (!g.has_edge(vs[i], vs[i + 1])) {
        add("not_a_path", "path " + pair_name + " uses missing edge " +
                              std::to_string(vs[i]) + "-" +
                              std::to_string(vs[i + 1]));
        break;
      }
    {
      std::vector<int> sorted = vs;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end())
        add("not_simple", "path " + pair_name + " repeats vertex " +
                              std::to_string(*dup));
    }
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      int v = vs[i];
      if (is_core[v]) {
        add("core_in_interior", "core vertex " + std::to_string(v) +
                                    " is internal to path " + pair_name);
        continue;
      }
      auto [it, fresh] = interior_owner.emplace(v, key);
      if (!fresh)
        add("interior_overlap",
            "vertex " + std::to_string(v) + " is internal to paths " +
                std::to_string(it->second.first) + "-" +
                std::to_string(it->second.second) + " and " + pair_name);
    }
  }

  result.ok = result.violations.empty();
  return result;
}

namespace {

// Backtracking path-system realization for the oracle. Vertex count is
// bounded by the oracle threshold, so vertex sets fit in 32-bit masks.
struct RealizeContext {
  const Graph* g;
  std::vector<int> core;
  std::vector<std::pair<int, int>> pair_order;  // core index pairs
  std::uint32_t core_mask = 0;
  std::vector<std::uint8_t> dead;  // [pair_idx << n_bits | used_mask]
  int n = 0;
  std::map<std::pair<int, int>, Path> found;
};

bool enumerate_paths(RealizeContext& ctx, std::size_t pair_idx,
                     std::uint32_t used);

// All simple a->b paths avoiding blocked vertices, ascending neighbor order.
bool extend_path(RealizeContext& ctx, std::size_t pair_idx, int b,
                 std::vector<int>& partial, std::uint32_t on_path,
                 std::uint32_t used) {
  int v = partial.back();
  for (int w : ctx.g->neighbors(v)) {
    if (w == b) {
      partial.push_back(w);
      std::uint32_t internals = on_path & ~(std::uint32_t{1} << partial.front());
      Path path;
      path.vertices = partial;
      auto key = ctx.pair_order[pair_idx];
      ctx.found[key] = path;
      if (enumerate_paths(ctx, pair_idx + 1, used | internals)) return true;
      ctx.found.erase(key);
      partial.pop_back();
      continue;
    }
    std::uint32_t bit = std::uint32_t{1} << w;
    if ((on_path & bit) || (used & bit) || (ctx.core_mask & bit)) continue;
    partial.push_back(w);
    if (extend_path(ctx, pair_idx, b, partial, on_path | bit, used))
      return true;
    partial.pop_back();
  }
  return false;
}

bool enumerate_paths(RealizeContext& ctx, std::size_t pair_idx,
                     std::uint32_t used) {
  if (pair_idx == ctx.pair_order.size()) return true;
  std::size_t key = (pair_idx << ctx.n) | used;
  if (ctx.dead[key]) return false;
  auto [ci, cj] = ctx.pair_order[pair_idx];
  int a = ctx.core[ci];
  int b = ctx.core[cj];
  std::vector<int> partial{a};
  if (!extend_path(ctx, pair_idx, b, partial,
                   std::uint32_t{1} << a, used)) {
    ctx.dead[key] = 1;
    return false;
  }
  return true;
}

// Count of shortest a-b paths whose internal vertices avoid the other cores;
// used only to order pairs (most constrained first).
std::pair<int, long long> shortest_path_stats(const Graph& g, int a, int b,
                                              std::uint32_t core_mask) {
  int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<long long> ways(n, 0);
  std::queue<int> queue;
  dist[a] = 0;
  ways[a] = 1;
  queue.push(a);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    if (v == b) continue;
    for (int w : g.neighbors(v)) {
      if (w != b && w != a && (core_mask & (std::uint32_t{1} << w))) continue;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        ways[w] = ways[v];
        queue.push(w);
      } else if (dist[w] == dist[v] + 1) {
        ways[w] += ways[v];
      }
    }
  }
  return {dist[b], ways[b]};
}

bool realize_core(const Graph& g, const std::vector<int>& core,
                  SubdivisionCertificate& out) {
  int n = g.vertex_count();
  RealizeContext ctx;
  ctx.g = &g;
  ctx.core = core;
  ctx.n = n;
  for (int v : core) ctx.core_mask |= std::uint32_t{1} << v;

  int t = static_cast<int>(core.size());
  struct PairInfo {
    std::pair<int, int> key;
    int dist;
    long long ways;
  };
  std::vector<PairInfo> infos;
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      auto [dist, ways] =
          shortest_path_stats(g, core[i], core[j], ctx.core_mask);
      if (dist < 0) return false;  // disconnected even before any use
      infos.push_back({{i, j}, dist, ways});
    }
  std::sort(infos.begin(), infos.end(), [](const PairInfo& a,
                                           const PairInfo& b) {
    if (a.ways != b.ways) return a.ways < b.ways;
    if (a.dist != b.dist) return a.dist > b.dist;
    return a.key < b.key;
  });
  for (const auto& info : infos) ctx.pair_order.push_back(info.key);
  ctx.dead.assign(ctx.pair_order.size() << n, 0);

  if (!enumerate_paths(ctx, 0, 0)) return false;
  out.t = t;
  out.core = core;
  out.paths = std::move(ctx.found);
  return true;
}

bool next_combination(std::vector<int>& idx, int pool) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < pool - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

OracleResult max_subdivision_bruteforce(const Graph& g, int cap,
                                        const OracleOptions& opts) {
  int n = g.vertex_count();
  if (n > opts.max_n)
    throw std::invalid_argument(
        "max_subdivision_bruteforce: graph above oracle threshold");
  OracleResult result;
  if (n == 0 || cap <= 0) return result;

  int start = std::min({cap, n, n > 0 ? g.max_degree() + 1 : 0});
  for (int t = start; t >= 1; --t) {
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) >= t - 1) candidates.push_back(v);
    if (static_cast<int>(candidates.size()) < t) continue;
    std::vector<int> idx(t);
    for (int i = 0; i < t; ++i) idx[i] = i;
    do {
      std::vector<int> core(t);
      for (int i = 0; i < t; ++i) core[i] = candidates[idx[i]];
      SubdivisionCertificate cert;
      if (realize_core(g, core, cert)) {
        result.t = t;
        result.cert = std::move(cert);
        return result;
      }
    } while (next_combination(idx, static_cast<int>(candidates.size())));
  }
  return result;
}

std::optional<SubdivisionCertificate> greedy_subdivision_direct(
    const Graph& g, int t, const GreedyOptions& opts) {
  if (t < 2) throw std::invalid_argument("greedy_subdivision_direct: t < 2");
  std::vector<int> pool;
  if (opts.core_pool) {
    pool = opts.core_pool->ids();
  } else {
    pool.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) pool[v] = v;
  }
  if (static_cast<int>(pool.size()) < t) return std::nullopt;
  // Highest degree first; sliding windows over this order give candidate
  // core sets in descending degree-sum order.
  std::sort(pool.begin(), pool.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });

  int windows = std::min(opts.candidate_budget,
                         static_cast<int>(pool.size()) - t + 1);
  int restarts_left = opts.restart_budget;
  for (int w = 0; w < windows && restarts_left > 0; ++w) {
    std::vector<int> core(pool.begin() + w, pool.begin() + w + t);
    std::sort(core.begin(), core.end());
    VertexSet core_set(core);
    VertexSet used;  // internal vertices claimed so far
    SubdivisionCertificate cert;
    cert.t = t;
    cert.core = core;
    bool failed = false;
    for (int i = 0; i < t && !failed; ++i) {
      for (int j = i + 1; j < t && !failed; ++j) {
        if (restarts_left <= 0) return std::nullopt;
        --restarts_left;
        VertexSet avoid = core_set;
        avoid.erase(core[i]);
        avoid.erase(core[j]);
        avoid = avoid.set_union(used);
        auto path = short_path(g, VertexSet({core[i]}),
                               VertexSet({core[j]}), avoid);
        if (!path) {
          failed = true;
          break;
        }
        for (std::size_t k = 1; k + 1 < path->vertices.size(); ++k)
          used.insert(path->vertices[k]);
        cert.paths[{i, j}] = *path;
      }
    }
    if (!failed) {
      if (!verify_subdivision(g, cert).ok)
        throw std::logic_error(
            "greedy_subdivision_direct: constructed certificate failed "
            "verification");
      return cert;
    }
  }
  return std::nullopt;
}

ReduceResult bounded_maxdeg_reduce(const Graph& g, int degree_cap,
                                   int t_target, const ReduceOptions& opts) {
  Rational d = g.average_degree();
  if (Rational(degree_cap) < d)
    throw std::invalid_argument(
        "bounded_maxdeg_reduce: degree_cap below average degree");

  int n = g.vertex_count();
  std::vector<int> high;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > degree_cap) high.push_back(v);

  std::vector<int> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;

  if (static_cast<int>(high.size()) >= t_target) {
    GreedyOptions gopts;
    gopts.core_pool = VertexSet(high);
    auto cert = greedy_subdivision_direct(g, t_target, gopts);
    if (cert) {
      ReduceResult result{g, identity, std::move(cert), 0};
      return result;
    }
  }
  if (high.empty()) {
    return ReduceResult{g, identity, std::nullopt, 0};
  }

  VertexSet keep;
  {
    std::vector<char> drop(n, 0);
    for (int v : high) drop[v] = 1;
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
      if (!drop[v]) ids.push_back(v);
    keep = VertexSet(ids);
  }
  InducedSubgraph sub = induced_subgraph(g, keep);
  ReduceResult result{sub.graph, sub.to_parent, std::nullopt,
                      static_cast<int>(high.size())};

  // Guaranteed regime: few deletions from a graph with min degree >= d/2
  // leave at least half the vertices with min degree >= d/4. Assert exactly
  // there; outside the regime the reduced graph is returned as-is.
  bool few_deleted = result.deleted < opts.bd_multiplier * d.to_double();
  bool min_deg_held = n > 0 && Rational(g.min_degree()) * Rational(2) >= d;
  if (few_deleted && min_deg_held) {
    bool size_ok = 2 * result.graph.vertex_count() >= n;
    bool deg_ok = result.graph.vertex_count() > 0 &&
                  Rational(result.graph.min_degree()) * Rational(4) >= d;
    if (!size_ok || !deg_ok)
      throw std::logic_error(
          "bounded_maxdeg_reduce: postcondition failed in the asserted "
          "regime");
  }
  return result;
}

SubdivisionCertificate lift_certificate(const SubdivisionCertificate& cert,
                                        const std::vector<int>& to_parent) {
  SubdivisionCertificate lifted;
  lifted.t = cert.t;
  lifted.core.reserve(cert.core.size());
  for (int v : cert.core) lifted.core.push_back(to_parent.at(v));
  for (const auto& [key, path] : cert.paths) {
    Path mapped;
    mapped.vertices.reserve(path.vertices.size());
    for (int v : path.vertices) mapped.vertices.push_back(to_parent.at(v));
    lifted.paths[key] = mapped;
  }
  return lifted;
}

}  // namespace crux
