#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "crux/webs.hpp"

namespace crux {

// Uniform report shell for the experiment runners: per-trial records plus
// summary statistics, JSON for the full artifact and CSV for the trial rows.
// Identical flags and seeds give byte-identical output.
struct ExperimentReport {
  std::string experiment;
  nlohmann::json input;
  nlohmann::json config;
  nlohmann::json trials = nlohmann::json::array();
  nlohmann::json summary;

  nlohmann::json to_json() const;
  // Header row from the union of trial keys (sorted), one row per trial in
  // order, LF line endings, decimal points from JSON serialization.
  std::string to_csv() const;
};

// For each p in order and each trial: G(n, p) with a derived per-trial seed,
// pipeline t recorded together with np and sqrt(n). Summary holds the lower
// median t per p and whether the medians are non-decreasing along p_list.
ExperimentReport experiment_dichotomy(int n, const std::vector<double>& p_list,
                                      int trials, const PipelineConfig& config);

// Pipeline t on disjoint unions of 1..copies copies of K_{a,a}; the sizes
// should all agree (a subdivision lives inside one copy). For a <= 6 the
// exhaustive oracle value on a single copy is recorded too.
ExperimentReport experiment_jung(int a, int copies, const PipelineConfig& config);

// Host G(max(ceil(c*t^2/100), t), min(1, c/4)): exhaustive maximum edge count
// between disjoint X, Y with |X|+|Y| = t, compared against c*t^2/12; the
// host's average degree against c^2*t^2/1000 (single sample, flagged
// empirical); and the complete-host negative control floor(t/2)*ceil(t/2).
ExperimentReport experiment_bipartite_obstruction(int t, double c,
                                                  std::uint64_t seed);

}  // namespace crux
