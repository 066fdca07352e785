#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crux/exec.hpp"
#include "crux/graph.hpp"

namespace crux {

// Parameters of the robustness scale rho(x) = eps / ln^2(15 x / k) for
// x >= k/5 and 0 below. Construction validates 0 < eps < 1, k >= 1, and the
// normalization condition: the integral of rho(x)/x over [1, inf) must stay
// below 1/8 (checked numerically with an analytic tail).
struct ExpanderParams {
  ExpanderParams(double eps, double k);

  double eps;
  double k;
};

// rho(x) for x > 0; throws on x <= 0. Natural logarithm throughout.
double rho(double x, const ExpanderParams& params);

// Minimum possible |N_{G-F}(X)| over deletion sets F of at most `budget`
// edges, together with an optimal F. Only edges between X and its boundary
// can shrink the neighborhood, and neighbors are swallowed greedily in order
// of how few edges tie them to X, so the greedy minimum is exact.
struct DeletionResult {
  std::size_t remaining_neighbors;
  std::vector<Edge> deleted;
};
DeletionResult min_neighborhood_under_deletion(const Graph& g,
                                               const VertexSet& x,
                                               std::size_t budget);

enum class CheckMode { Exact, Sampled };

struct ExpanderCheckOptions {
  CheckMode mode = CheckMode::Exact;
  // Exact enumeration refuses graphs above this order.
  int exact_threshold = 14;
  // Sampled mode draws ~multiplier*n random connected sets plus the same
  // number of uniform sets, stratified across the admissible size classes.
  int sample_multiplier = 10;
  std::uint64_t seed = 0;
  ExecMode exec = ExecMode::Auto;
};

// Verdict of a robust-expander check. A refutation carries a witness: the
// violating set X and a deletion set F within budget under which X's
// neighborhood falls below rho(|X|)*|X|. Witnesses always re-verify.
struct ExpanderCheckResult {
  enum class Verdict { Certified, Refuted, SampledPass };
  Verdict verdict;
  CheckMode mode;
  std::uint64_t sets_tested = 0;
  std::optional<VertexSet> violating_set;
  std::vector<Edge> deleted_edges;
  nlohmann::json to_json() const;
};

ExpanderCheckResult check_robust_expander(const Graph& g,
                                          const ExpanderParams& params,
                                          const ExpanderCheckOptions& opts = {});

// Confirms that (x, f) is a genuine counterexample for (g, params).
bool refutation_is_valid(const Graph& g, const ExpanderParams& params,
                         const VertexSet& x, const std::vector<Edge>& f);

struct ExtractOptions {
  ExpanderCheckOptions check;
  // The descend/peel loop aborts after 10*n iterations.
  int iteration_cap_multiplier = 10;
};

// Result of extraction. The subgraph always satisfies the two degree
// postconditions (average degree at least half the input's, minimum degree at
// least half its own average); status records how the search ended.
struct ExtractResult {
  enum class Status { Certified, SampledPass, Stuck, IterationCap };
  Status status;
  InducedSubgraph subgraph;
  int iterations = 0;
  std::uint64_t sets_tested = 0;
};

ExtractResult extract_robust_expander(const Graph& g,
                                      const ExpanderParams& params,
                                      const ExtractOptions& opts = {});

// Removes vertices of degree below half the current average until none
// remain. Average degree never decreases, so the result keeps d(H) >= d(G)
// and gains min_degree(H) >= d(H)/2. Requires at least one edge.
InducedSubgraph peel_to_min_degree(const Graph& g);

// B^r(X) in G - avoid: all vertices within distance r of X, X included.
VertexSet ball(const Graph& g, const VertexSet& x, int r,
               const VertexSet& avoid);

// Shortest path from x to y in G - w, ties broken toward the smallest vertex
// id layer by layer, so the result is unique and platform-independent.
std::optional<Path> short_path(const Graph& g, const VertexSet& x,
                               const VertexSet& y, const VertexSet& w);

// An (a, b, rho) expansion window: every X with a <= |X| <= b is expected to
// have |N(X)| >= rho * |X|.
struct ExpansionRange {
  double a;
  double b;
  double rho;
};

// Ball-growth selection: keeps every index j whose r-ball around groups[j]
// in G - (w + avoid_each[j]) reaches (1 + rho/4)^r * x vertices. Hypotheses
// are checked and reported by name, never silently assumed; when they all
// hold, at least q - 2*k*r indices must survive.
struct FamilySelection {
  std::vector<int> selected;
  std::vector<std::string> hypothesis_violations;
  bool hypotheses_hold = false;
};
FamilySelection select_expanding_family(
    const Graph& g, const ExpansionRange& range,
    const std::vector<VertexSet>& groups, const VertexSet& w,
    const std::vector<VertexSet>& avoid_each, int k, int r, int x);

enum class LargeBallMode {
  // Collective growth: the corollary-style hypotheses (q large relative to
  // k log k / rho, r >= 10 log k / rho); threshold is typically k*x/2.
  CollectiveGrowth,
  // Thin layers: disjoint groups whose avoid sets meet each fresh BFS layer
  // in at most l*x*rho^2/40 vertices; threshold is typically q*x.
  ThinLayers,
};

struct LargeBallResult {
  std::optional<int> index;
  int ball_size = 0;
  std::vector<std::string> hypothesis_violations;
};

LargeBallResult find_large_ball_index(const Graph& g,
                                      const ExpansionRange& range,
                                      const std::vector<VertexSet>& groups,
                                      const VertexSet& w,
                                      const std::vector<VertexSet>& avoid_each,
                                      double threshold, int r,
                                      LargeBallMode mode, int x);

// d(G - W) and the guarantee rho(n)*d/20 it is measured against. The
// precondition |W| <= rho(n)*n/20 is reported, not assumed.
struct DeletedDegreeReport {
  Rational actual;
  double bound;
  bool precondition_ok;
  bool holds;
};
DeletedDegreeReport deleted_avg_degree_bound(const Graph& g,
                                             const ExpanderParams& params,
                                             const VertexSet& w);

}  // namespace crux
