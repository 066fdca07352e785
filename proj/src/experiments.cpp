#include "crux/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crux/generators.hpp"
#include "crux/rng.hpp"
#include "crux/subdivision.hpp"

namespace crux {

nlohmann::json ExperimentReport::to_json() const {
  return nlohmann::json{{"experiment", experiment},
                        {"input", input},
                        {"config", config},
                        {"trials", trials},
                        {"summary", summary}};
}

std::string ExperimentReport::to_csv() const {
  std::set<std::string> keys;
  for (const auto& row : trials)
    for (auto it = row.begin(); it != row.end(); ++it) keys.insert(it.key());
  std::string out;
  bool first = true;
  for (const auto& k : keys) {
    if (!first) out += ',';
    out += k;
    first = false;
  }
  out += '\n';
  for (const auto& row : trials) {
    first = true;
    for (const auto& k : keys) {
      if (!first) out += ',';
      first = false;
      if (!row.contains(k)) continue;
      const auto& v = row.at(k);
      if (v.is_string())
        out += v.get<std::string>();
      else
        out += v.dump();
    }
    out += '\n';
  }
  return out;
}

namespace {

// Lower median: element (k-1)/2 of the sorted values.
int lower_median(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

}  // namespace

ExperimentReport experiment_dichotomy(int n, const std::vector<double>& p_list,
                                      int trials, const PipelineConfig& config) {
  if (n < 1 || trials < 1 || p_list.empty())
    throw std::invalid_argument("dichotomy: need n >= 1, trials >= 1, probabilities");
  double max_p = *std::max_element(p_list.begin(), p_list.end());
  if (n * max_p < 1.0)
    throw std::invalid_argument("dichotomy: n * max(p) must be at least 1");

  ExperimentReport report;
  report.experiment = "dichotomy";
  report.input = {{"n", n}, {"p_list", p_list}, {"trials", trials}};
  report.config = config.to_json();

  std::vector<int> medians;
  bool monotone = true;
  std::uint64_t trial_index = 0;
  for (double p : p_list) {
    std::vector<int> ts;
    for (int k = 0; k < trials; ++k, ++trial_index) {
      std::uint64_t seed = derive_seed(config.seed, trial_index);
      Graph g = generate_gnp(n, p, seed);
      PipelineConfig run_cfg = config;
      run_cfg.seed = seed;
      PipelineResult res = pipeline_find_subdivision(g, run_cfg);
      nlohmann::json row{{"p", p},
                         {"trial", k},
                         {"seed", seed},
                         {"t", res.t},
                         {"np", n * p},
                         {"sqrt_n", std::sqrt(static_cast<double>(n))}};
      row["certificate"] = res.cert ? res.cert->to_json() : nlohmann::json();
      report.trials.push_back(std::move(row));
      ts.push_back(res.t);
    }
    int med = lower_median(ts);
    if (!medians.empty() && med < medians.back()) monotone = false;
    medians.push_back(med);
  }
  nlohmann::json med_rows = nlohmann::json::array();
  for (std::size_t i = 0; i < p_list.size(); ++i)
    med_rows.push_back({{"p", p_list[i]}, {"median_t", medians[i]}});
  report.summary = {{"medians", med_rows},
                    {"monotone_nondecreasing", monotone}};
  return report;
}

ExperimentReport experiment_jung(int a, int copies, const PipelineConfig& config) {
  if (a < 1 || copies < 1)
    throw std::invalid_argument("jung: need a >= 1 and copies >= 1");
  ExperimentReport report;
  report.experiment = "jung";
  report.input = {{"a", a}, {"copies", copies}};
  report.config = config.to_json();

  std::vector<int> ts;
  for (int k = 1; k <= copies; ++k) {
    std::vector<GraphSpec> parts(static_cast<std::size_t>(k),
                                 GraphSpec::complete_bipartite(a, a));
    GraphSpec spec = k == 1 ? parts[0] : GraphSpec::disjoint_union(parts);
    Graph g = generate(spec);
    PipelineResult res = pipeline_find_subdivision(g, config);
    nlohmann::json row{{"copies", k}, {"t", res.t}, {"n", g.vertex_count()}};
    row["certificate"] = res.cert ? res.cert->to_json() : nlohmann::json();
    report.trials.push_back(std::move(row));
    ts.push_back(res.t);
  }
  bool all_equal =
      std::all_of(ts.begin(), ts.end(), [&](int t) { return t == ts.front(); });
  report.summary = {{"t_single", ts.front()},
                    {"t_union", ts.back()},
                    {"all_equal", all_equal}};
  if (2 * a <= 12) {
    auto oracle = max_subdivision_bruteforce(
        generate_complete_bipartite(a, a), 2 * a);
    report.summary["oracle_t"] = oracle.t;
  }
  return report;
}

namespace {

// Maximum number of edges between disjoint X, Y with |X|+|Y| = t, exhaustive
// over all t-subsets and their bipartitions. Adjacency inside each chosen
// subset is packed into bitmasks so a bipartition costs t popcounts.
long long max_bipartite_edges(const Graph& g, int t) {
  const int n = g.vertex_count();
  if (t > n) return 0;  // no valid split exists
  std::vector<int> pick(t);
  for (int i = 0; i < t; ++i) pick[i] = i;
  long long best = 0;
  while (true) {
    std::vector<std::uint64_t> rows(t, 0);
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j)
        if (i != j && g.has_edge(pick[i], pick[j]))
          rows[i] |= std::uint64_t{1} << j;
    const std::uint64_t full = t == 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << t) - 1;
    for (std::uint64_t x = 0; x <= full; ++x) {
      std::uint64_t y = full & ~x;
      long long count = 0;
      for (int i = 0; i < t; ++i)
        if (x >> i & 1) count += __builtin_popcountll(rows[i] & y);
      best = std::max(best, count);
    }
    // next lexicographic t-combination of [0, n)
    int i = t - 1;
    while (i >= 0 && pick[i] == n - t + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

double binom_log(int n, int k) {
  double s = 0;
  for (int i = 0; i < k; ++i)
    s += std::log(static_cast<double>(n - i)) - std::log(static_cast<double>(i + 1));
  return s;
}

}  // namespace

ExperimentReport experiment_bipartite_obstruction(int t, double c,
                                                  std::uint64_t seed) {
  if (t < 2 || t > 14)
    throw std::invalid_argument("bipartite_obstruction: need 2 <= t <= 14");
  if (!(c > 0)) throw std::invalid_argument("bipartite_obstruction: c must be positive");
  // The source host is G(c*t^2/100, c/4); scaling the order up to t keeps
  // the split enumeration (and the complete-host control) non-degenerate at
  // desk sizes.
  int n_host = std::max(static_cast<int>(std::ceil(c * t * t / 100.0)), t);
  double p = std::min(1.0, c / 4.0);
  if (binom_log(n_host, t) + t * std::log(2.0) > std::log(5e8))
    throw std::invalid_argument("bipartite_obstruction: instance too large to enumerate");

  ExperimentReport report;
  report.experiment = "bipartite_obstruction";
  report.input = {{"t", t}, {"c", c}, {"seed", seed}};
  report.config = {{"n_host", n_host}, {"p", p}};

  Graph g = generate_gnp(n_host, p, seed);
  long long max_edges = max_bipartite_edges(g, t);
  double bound = c * t * t / 12.0;
  double avg_degree =
      g.edge_count() == 0 ? 0.0 : g.average_degree().to_double();
  double degree_bound = c * c * t * t / 1000.0;

  report.trials.push_back({{"host", "gnp"},
                           {"n", n_host},
                           {"max_bipartite_edges", max_edges},
                           {"bound", bound},
                           {"within_bound", static_cast<double>(max_edges) <= bound}});

  Graph complete = generate_complete(n_host);
  long long complete_max = max_bipartite_edges(complete, t);
  report.trials.push_back({{"host", "complete"},
                           {"n", n_host},
                           {"max_bipartite_edges", complete_max},
                           {"bound", bound},
                           {"within_bound", static_cast<double>(complete_max) <= bound}});

  report.summary = {{"max_bipartite_edges", max_edges},
                    {"bound_ct2_over_12", bound},
                    {"within_bound", static_cast<double>(max_edges) <= bound},
                    {"complete_host_max", complete_max},
                    {"complete_expected", static_cast<long long>(t / 2) * ((t + 1) / 2)},
                    {"avg_degree", avg_degree},
                    {"avg_degree_bound", degree_bound},
                    {"avg_degree_meets_bound", avg_degree >= degree_bound},
                    {"avg_degree_note", "single-sample empirical check"}};
  return report;
}

}  // namespace crux
