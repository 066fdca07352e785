#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crux/expansion.hpp"
#include "crux/graph.hpp"
#include "crux/rational.hpp"
#include "crux/subdivision.hpp"

namespace crux {

// K_{1,x}: a center adjacent to every leaf.
struct Star {
  int center = -1;
  VertexSet leaves;
};

struct UnitParams {
  int h1 = 1;  // minimum branch count
  int h2 = 1;  // minimum leaves per star
  int h3 = 1;  // maximum branch path length
};

// One branch of a unit: a path from the unit center to a star center, plus
// the star hanging at its end.
struct UnitBranch {
  Path path;  // starts at the unit center, ends at star.center
  Star star;
};

// Center joined to >= h1 disjoint stars by internally disjoint paths of
// length <= h3. Interior: center, path vertices, star centers. Exterior:
// the leaves.
struct Unit {
  int center = -1;
  std::vector<UnitBranch> branches;
  UnitParams params;

  VertexSet interior() const;
  VertexSet exterior() const;
  VertexSet vertices() const;
};

struct WebParams {
  int h4 = 1;  // minimum unit count
  int h5 = 1;  // maximum connecting path length
};

struct WebBranch {
  Path path;  // starts at the web center, ends at unit.center
  Unit unit;
};

// Center joined to >= h4 disjoint units by paths of length <= h5. Core:
// center plus connecting paths; interior: core plus unit interiors;
// exterior: union of unit exteriors.
struct Web {
  int center = -1;
  std::vector<WebBranch> branches;
  WebParams params;

  VertexSet core() const;
  VertexSet interior() const;
  VertexSet exterior() const;
  VertexSet vertices() const;
};

std::vector<Violation> validate_star(const Graph& g, const Star& s);
std::vector<Violation> validate_unit(const Graph& g, const Unit& u);
std::vector<Violation> validate_web(const Graph& g, const Web& w);

struct StarOptions {
  // Skewed-regime restrictions: centers must come from center_pool and
  // leaves from leaf_pool when set.
  std::optional<VertexSet> center_pool;
  std::optional<VertexSet> leaf_pool;
};

// Greedy maximal star packing avoiding W: repeatedly takes the vertex with
// the most unused allowed neighbors (ties to the lowest id) with exactly
// leaf_count lowest-id leaves, until target_count stars or exhaustion.
std::vector<Star> find_disjoint_stars(const Graph& g, const VertexSet& w,
                                      int leaf_count, int target_count,
                                      const StarOptions& opts = {});

// Grows a maximal leaf-to-leaf path family between the S and R stars
// (avoiding all star centers, paths sharing a star pairwise disjoint) and
// assembles a unit around the first star that accumulates h1 connections.
// The range describes the expansion regime the caller established; outputs
// are validated structurally, so it is advisory.
std::optional<Unit> build_unit(const Graph& g, const VertexSet& w,
                               const std::vector<Star>& s_stars,
                               const std::vector<Star>& r_stars,
                               const UnitParams& params,
                               const ExpansionRange& range);

// Grows per-star shortest path families from star centers to unused unit
// centers; once a star reaches 2*h4 connections, prunes polluted units and
// returns a web over the >= h4 clean ones (branch guarantees halve).
std::optional<Web> build_web(const Graph& g, const VertexSet& w,
                             const std::vector<Star>& s_stars,
                             const std::vector<Unit>& units,
                             const WebParams& params,
                             const ExpansionRange& range1,
                             const ExpansionRange& range2);

// Double-loop connection of unit exteriors by shortest paths avoiding all
// interiors and used vertices, star-deletion bookkeeping included. Returns
// a certificate over the first s unit centers or none.
std::optional<SubdivisionCertificate> connect_units(
    const Graph& g, const std::vector<Unit>& units, int s);

// Five-step web connection loop with the three deletion rules (branch /
// unit / web at the one-half thresholds). Returns a certificate over s
// surviving web centers or none.
std::optional<SubdivisionCertificate> connect_webs(const Graph& g,
                                                   const std::vector<Web>& webs,
                                                   int s,
                                                   const ExpansionRange& range);

// Desk-scale parameter schedule. Shapes keep the source functional forms
// (powers of log n and d); multipliers scale them into the desk regime.
struct PipelineConfig {
  double eps = 0.1;                  // expander parameter for extractions
  Rational alpha = Rational(1, 100); // crux density parameter
  double h1_mult = 5.6e-8;
  double h2_mult = 2.7;
  double h3_mult = 4.2e-3;
  double h4_mult = 0.1;
  double h5_mult = 1.3e-4;
  int exact_threshold = 14;   // expander-check exact/sampled switch
  int oracle_threshold = 11;  // exhaustive subdivision search cutoff
  int greedy_candidates = 8;  // core windows per greedy call
  int restart_budget = 400;   // path searches per greedy call
  double skew_threshold = 8.0;  // case split needs |Q| <= n / skew_threshold
  // Components larger than this skip the extraction ladder (its sampled
  // checks grow too costly) and rely on the greedy and reduction stages.
  int max_ladder_n = 300;
  std::uint64_t seed = 0;

  // The documented desk preset (the defaults above).
  static PipelineConfig desk();

  nlohmann::json to_json() const;
  static PipelineConfig from_json(const nlohmann::json& j);
};

struct PipelineResult {
  int t = 0;
  std::optional<SubdivisionCertificate> cert;  // verified in the input graph
  nlohmann::json trace = nlohmann::json::array();
};

// Stage ladder: per-component greedy escalation, dense unit pipeline on the
// eps*d extraction, web pipelines on the d^2 and crux-level extractions
// (uniform/skewed split), bounded-max-degree reduction, exhaustive oracle on
// tiny components. The largest verified certificate wins; the result always
// verifies in the input graph.
PipelineResult pipeline_find_subdivision(const Graph& g,
                                         const PipelineConfig& config);

}  // namespace crux
