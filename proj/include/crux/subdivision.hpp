#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crux/graph.hpp"

namespace crux {

// A K_t-subdivision witness: t distinct core vertices plus one path per
// unordered core pair. Paths are keyed by core INDICES (i, j) with i < j;
// the JSON schema is {"t": int, "core": [int], "paths": {"i-j": [int,...]}}.
struct SubdivisionCertificate {
  int t = 0;
  std::vector<int> core;
  std::map<std::pair<int, int>, Path> paths;

  nlohmann::json to_json() const;
  static SubdivisionCertificate from_json(const nlohmann::json& j);
};

struct Violation {
  std::string code;     // stable identifier, e.g. "interior_overlap"
  std::string message;  // human-readable detail naming vertices/pairs
};

struct VerificationResult {
  bool ok = false;
  std::vector<Violation> violations;
  nlohmann::json to_json() const;
};

// Checks every certificate invariant against g; malformed input produces
// violations, never exceptions.
VerificationResult verify_subdivision(const Graph& g,
                                      const SubdivisionCertificate& cert);

struct OracleOptions {
  int max_n = 12;  // hard feasibility threshold for the exhaustive search
};

struct OracleResult {
  int t = 0;
  std::optional<SubdivisionCertificate> cert;
};

// Exhaustive maximum-subdivision search. t descends from min(cap, max degree
// + 1); cores are restricted to vertices of degree >= t-1 and scanned in
// lexicographic order; the path system search backtracks over pairs in
// increasing shortest-path-count order with memoized dead states.
OracleResult max_subdivision_bruteforce(const Graph& g, int cap,
                                        const OracleOptions& opts = {});

struct GreedyOptions {
  // When set, core candidates are drawn only from this pool.
  std::optional<VertexSet> core_pool;
  int candidate_budget = 50;  // core sets tried, descending degree-sum
  int restart_budget = 1000;  // total path-search attempts across all sets
};

// Algorithm-2-style greedy: pick t cores of highest degree, connect pairs in
// double-loop order by shortest paths avoiding used vertices and other
// cores; rotate to the next candidate core set on failure.
std::optional<SubdivisionCertificate> greedy_subdivision_direct(
    const Graph& g, int t, const GreedyOptions& opts = {});

struct ReduceOptions {
  // The high-degree assertion threshold analogue: postconditions |H| >= n/2
  // and min degree >= d/4 are asserted only when fewer than
  // bd_multiplier * d(G) vertices were deleted and min degree >= d/2 held.
  double bd_multiplier = 0.25;
};

struct ReduceResult {
  Graph graph;                                  // reduced host (or original)
  std::vector<int> to_parent;                   // id map into the input
  std::optional<SubdivisionCertificate> cert;   // set when the high-degree
                                                // vertices yield one directly
  int deleted = 0;
};

// If >= t_target vertices exceed degree_cap, tries the greedy builder on
// exactly those vertices; otherwise deletes all of them and returns the
// reduced graph.
ReduceResult bounded_maxdeg_reduce(const Graph& g, int degree_cap,
                                   int t_target,
                                   const ReduceOptions& opts = {});

// Rewrites certificate vertex ids through an induced-subgraph map so that a
// certificate found in the subgraph verifies in the parent graph.
SubdivisionCertificate lift_certificate(const SubdivisionCertificate& cert,
                                        const std::vector<int>& to_parent);

}  // namespace crux
