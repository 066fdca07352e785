#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "crux/exec.hpp"
#include "crux/graph.hpp"
#include "crux/rational.hpp"

namespace crux {

// c_alpha(G) = order of a smallest subgraph whose average degree reaches
// alpha * d(G). All density comparisons are exact rationals.

struct CruxOptions {
  // Exact search refuses graphs above this order unless raised by the
  // caller; the per-size scan stays cheap because of the edge-count bound.
  int exact_threshold = 20;
  // When positive, only subgraph orders up to the cap are scanned. The
  // report then answers the decision question "is c_alpha <= cap" exactly:
  // either a witness is found or lower = cap + 1.
  int size_cap = 0;
  ExecMode exec = ExecMode::Auto;
};

struct CruxReport {
  enum class Mode { Exact, Bounded };
  Mode mode = Mode::Exact;
  Rational alpha;
  int lower = 1;
  int upper = 0;
  // Certified means every order below `lower` was exhaustively refuted.
  bool lower_certified = false;
  std::optional<VertexSet> witness;
  nlohmann::json to_json() const;
};

CruxReport crux_exact(const Graph& g, const Rational& alpha,
                      const CruxOptions& opts = {});

struct CruxBoundsOptions {
  // Orders up to this bound are scanned exhaustively for the certified
  // lower bound.
  int scan_threshold = 14;
  ExecMode exec = ExecMode::Auto;
};

// Upper bound from degeneracy-order peeling plus greedy witness shrinking;
// lower bound exact up to the scan threshold.
CruxReport crux_bounds(const Graph& g, const Rational& alpha,
                       const CruxBoundsOptions& opts = {});

// Edge-expansion profile: min over nonempty S with |S| <= delta*n of
// e(S, S^c) / (d |S|).
enum class ProfileMode { Exact, Sampled };

struct ProfileOptions {
  int exact_threshold = 20;
  int sample_trials = 2000;
  std::uint64_t seed = 0;
  ExecMode exec = ExecMode::Auto;
};

struct ProfileReport {
  ProfileMode mode = ProfileMode::Exact;
  double delta = 0.0;
  Rational value;
  // Smallest minimizer in (value, size, lexicographic) order for the exact
  // mode; best sampled set otherwise (an upper bound on the true profile).
  VertexSet argmin;
  std::uint64_t sets_tested = 0;
  nlohmann::json to_json() const;
};

ProfileReport expansion_profile(const Graph& g, double delta, ProfileMode mode,
                                const ProfileOptions& opts = {});

// The small-set-expansion consequence of crux minimality: with
// delta = (c_eps(G) - 1) / n, every set below the crux order has edge
// expansion above 1 - eps. Exact on both sides.
struct SseReport {
  int crux_order = 0;
  double delta = 0.0;
  Rational phi;
  Rational one_minus_eps;
  bool holds = false;
  nlohmann::json to_json() const;
};

SseReport sse_crux_consistency(const Graph& g, const Rational& eps,
                               const CruxOptions& opts = {});

// Hardness gadget: rescales g so that deciding c_eps(G') <= k is exactly
// deciding whether g has a k-clique. Output density lands in
// ((k-1-1/k)/eps, (k-1)/eps] and the clique number is preserved.
struct GadgetOptions {
  // Clique-number preservation is asserted by brute force when the output
  // stays at or below this order.
  int omega_assert_threshold = 5000;
};

struct GadgetResult {
  Graph graph;
  // 0 = input already inside the target interval, 1 = replicate+pad,
  // 2 = cross-matched copies (possibly followed by case 1).
  int case_used = 0;
  Rational density;
  int omega = -1;  // -1 when the assert threshold suppressed the computation
  nlohmann::json to_json() const;
};

GadgetResult np_gadget(const Graph& g, int k, const Rational& eps,
                       const GadgetOptions& opts = {});

// Exact maximum clique order, branch and bound with greedy coloring bounds.
int max_clique_size(const Graph& g);

}  // namespace crux
