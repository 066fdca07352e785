#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crux/crux_ops.hpp"
#include "crux/expansion.hpp"
#include "crux/experiments.hpp"
#include "crux/generators.hpp"
#include "crux/graph.hpp"
#include "crux/graph_io.hpp"
#include "crux/rational.hpp"
#include "crux/subdivision.hpp"
#include "crux/webs.hpp"

namespace {

using crux::Graph;

// Usage problems (bad flags, malformed inputs) exit with 2; verification
// failures with 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& spec_json, const std::string& graph_file) {
  if (!spec_json.empty() && !graph_file.empty())
    throw UsageError("give either --spec or --graph, not both");
  try {
    if (!spec_json.empty())
      return crux::generate(
          crux::GraphSpec::from_json(nlohmann::json::parse(spec_json)));
    if (!graph_file.empty()) return crux::read_graph_file(graph_file);
  } catch (const std::exception& e) {
    throw UsageError(std::string("failed to load graph: ") + e.what());
  }
  throw UsageError("one of --spec or --graph is required");
}

void emit_text(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + out_file);
  f << text;
}

void emit_json(const nlohmann::json& j, const std::string& out_file) {
  emit_text(j.dump(2) + "\n", out_file);
}

crux::Rational parse_rational_flag(const std::string& text, const char* flag) {
  try {
    return crux::parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

crux::PipelineConfig load_config(const std::string& config_file,
                                 std::uint64_t seed) {
  crux::PipelineConfig cfg = crux::PipelineConfig::desk();
  if (!config_file.empty()) {
    std::ifstream f(config_file);
    if (!f) throw UsageError("cannot open config file: " + config_file);
    nlohmann::json j;
    try {
      f >> j;
      cfg = crux::PipelineConfig::from_json(j);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad config file: ") + e.what());
    }
  }
  cfg.seed = seed;
  return cfg;
}

nlohmann::json report_with_csv(const crux::ExperimentReport& report,
                               const std::string& csv_file) {
  if (!csv_file.empty()) emit_text(report.to_csv(), csv_file);
  return report.to_json();
}

const char* extract_status_name(crux::ExtractResult::Status s) {
  switch (s) {
    case crux::ExtractResult::Status::Certified: return "certified";
    case crux::ExtractResult::Status::SampledPass: return "sampled_pass";
    case crux::ExtractResult::Status::Stuck: return "stuck";
    case crux::ExtractResult::Status::IterationCap: return "iteration_cap";
  }
  return "unknown";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust-expander extraction, cruxes, and clique subdivisions"};
  app.require_subcommand(1);

  std::string spec_json, graph_file, out_file, cert_file, config_file, csv_file;
  std::string mode = "exact";
  std::string alpha_text = "1/2", eps_text = "1/2", delta_text;
  double eps_flag = 0.1;
  double k_flag = 1.0;
  double c_flag = 1.0;
  std::uint64_t seed = 0;
  int trials = 3;
  int n_flag = 256;
  int a_flag = 3;
  int copies = 3;
  int k_int = 3;
  int t_flag = 4;
  std::vector<double> p_list;

  auto add_graph_flags = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_json, "graph spec as JSON");
    cmd->add_option("--graph", graph_file, "graph file (edge-list format)");
  };

  auto* gen = app.add_subcommand("gen", "generate a graph from a spec");
  gen->add_option("--spec", spec_json, "graph spec as JSON")->required();
  gen->add_option("--out", out_file, "output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "basic graph statistics");
  add_graph_flags(analyze);
  analyze->add_option("--out", out_file);

  auto* extract = app.add_subcommand("extract-expander",
                                     "extract a robust-expander subgraph");
  add_graph_flags(extract);
  extract->add_option("--eps", eps_flag, "expander parameter epsilon");
  extract->add_option("--k", k_flag, "expander parameter k");
  extract->add_option("--mode", mode, "exact|sampled");
  extract->add_option("--seed", seed);
  extract->add_option("--out", out_file);

  auto* cruxcmd = app.add_subcommand("crux", "crux order c_alpha");
  add_graph_flags(cruxcmd);
  cruxcmd->add_option("--alpha", alpha_text, "density parameter (rational)");
  cruxcmd->add_option("--mode", mode, "exact|bounds");
  cruxcmd->add_option("--out", out_file);

  auto* profile = app.add_subcommand("profile", "expansion profile phi_delta");
  add_graph_flags(profile);
  profile->add_option("--delta", delta_text, "set-size fraction (rational)")
      ->required();
  profile->add_option("--mode", mode, "exact|sampled");
  profile->add_option("--seed", seed);
  profile->add_option("--trials", trials, "sampled-mode trials");
  profile->add_option("--out", out_file);

  auto* find = app.add_subcommand("find-subdivision",
                                  "largest clique subdivision the pipeline finds");
  add_graph_flags(find);
  find->add_option("--config", config_file, "pipeline config JSON file");
  find->add_option("--seed", seed);
  find->add_option("--out", out_file);

  auto* verify = app.add_subcommand("verify", "verify a subdivision certificate");
  add_graph_flags(verify);
  verify->add_option("--cert", cert_file, "certificate JSON file")->required();
  verify->add_option("--out", out_file);

  auto* gadget = app.add_subcommand("gadget", "clique-hardness density gadget");
  add_graph_flags(gadget);
  gadget->add_option("--k", k_int, "clique order");
  gadget->add_option("--eps", eps_text, "density parameter (rational)");
  gadget->add_option("--out", out_file);

  auto* dich = app.add_subcommand("dichotomy", "median subdivision order vs p");
  dich->add_option("--n", n_flag, "host order");
  dich->add_option("--p", p_list, "edge probabilities (repeatable)");
  dich->add_option("--trials", trials, "trials per probability");
  dich->add_option("--seed", seed);
  dich->add_option("--config", config_file);
  dich->add_option("--csv", csv_file, "also write trial rows as CSV");
  dich->add_option("--out", out_file);

  auto* jung = app.add_subcommand("jung", "disjoint unions of K_{a,a}");
  jung->add_option("--a", a_flag, "bipartition size")->required();
  jung->add_option("--copies", copies, "maximum number of copies");
  jung->add_option("--seed", seed);
  jung->add_option("--config", config_file);
  jung->add_option("--csv", csv_file);
  jung->add_option("--out", out_file);

  auto* bip = app.add_subcommand("bipartite-obstruction",
                                 "exhaustive split edge-count bound");
  bip->add_option("--t", t_flag, "split size")->required();
  bip->add_option("--c", c_flag, "density constant");
  bip->add_option("--seed", seed);
  bip->add_option("--csv", csv_file);
  bip->add_option("--out", out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      Graph g = load_graph(spec_json, "");
      emit_text(crux::serialize_graph(g), out_file);
    } else if (*analyze) {
      Graph g = load_graph(spec_json, graph_file);
      nlohmann::json j{{"n", g.vertex_count()}, {"m", g.edge_count()}};
      if (g.edge_count() > 0) {
        j["d"] = g.average_degree().to_double();
        j["d_exact"] = g.average_degree().str();
      } else {
        j["d"] = 0.0;
        j["d_exact"] = "0";
      }
      j["min_degree"] = g.vertex_count() ? g.min_degree() : 0;
      j["max_degree"] = g.vertex_count() ? g.max_degree() : 0;
      j["components"] = crux::connected_components(g).size();
      emit_json(j, out_file);
    } else if (*extract) {
      Graph g = load_graph(spec_json, graph_file);
      crux::ExtractOptions opts;
      if (mode == "sampled")
        opts.check.mode = crux::CheckMode::Sampled;
      else if (mode != "exact")
        throw UsageError("--mode must be exact or sampled");
      opts.check.seed = seed;
      auto r = crux::extract_robust_expander(g, crux::ExpanderParams(eps_flag, k_flag),
                                             opts);
      nlohmann::json j{{"status", extract_status_name(r.status)},
                       {"iterations", r.iterations},
                       {"sets_tested", r.sets_tested},
                       {"n", r.subgraph.graph.vertex_count()},
                       {"m", r.subgraph.graph.edge_count()},
                       {"vertices", r.subgraph.to_parent}};
      if (r.subgraph.graph.edge_count() > 0)
        j["d"] = r.subgraph.graph.average_degree().to_double();
      emit_json(j, out_file);
    } else if (*cruxcmd) {
      Graph g = load_graph(spec_json, graph_file);
      crux::Rational alpha = parse_rational_flag(alpha_text, "--alpha");
      crux::CruxReport report;
      if (mode == "exact")
        report = crux::crux_exact(g, alpha);
      else if (mode == "bounds")
        report = crux::crux_bounds(g, alpha);
      else
        throw UsageError("--mode must be exact or bounds");
      emit_json(report.to_json(), out_file);
    } else if (*profile) {
      Graph g = load_graph(spec_json, graph_file);
      crux::Rational delta = parse_rational_flag(delta_text, "--delta");
      crux::ProfileOptions opts;
      opts.seed = seed;
      opts.sample_trials = trials > 0 ? trials * 100 : 2000;
      crux::ProfileMode pmode;
      if (mode == "exact")
        pmode = crux::ProfileMode::Exact;
      else if (mode == "sampled")
        pmode = crux::ProfileMode::Sampled;
      else
        throw UsageError("--mode must be exact or sampled");
      auto report = crux::expansion_profile(g, delta.to_double(), pmode, opts);
      emit_json(report.to_json(), out_file);
    } else if (*find) {
      Graph g = load_graph(spec_json, graph_file);
      auto cfg = load_config(config_file, seed);
      auto result = crux::pipeline_find_subdivision(g, cfg);
      nlohmann::json j{{"t", result.t}, {"trace", result.trace}};
      j["certificate"] =
          result.cert ? result.cert->to_json() : nlohmann::json();
      if (result.cert)
        j["verified"] = crux::verify_subdivision(g, *result.cert).ok;
      emit_json(j, out_file);
    } else if (*verify) {
      Graph g = load_graph(spec_json, graph_file);
      std::ifstream f(cert_file);
      if (!f) throw UsageError("cannot open certificate file: " + cert_file);
      crux::SubdivisionCertificate cert;
      try {
        nlohmann::json j;
        f >> j;
        cert = crux::SubdivisionCertificate::from_json(j);
      } catch (const std::exception& e) {
        throw UsageError(std::string("bad certificate file: ") + e.what());
      }
      auto vr = crux::verify_subdivision(g, cert);
      emit_json(vr.to_json(), out_file);
      return vr.ok ? 0 : 1;
    } else if (*gadget) {
      Graph g = load_graph(spec_json, graph_file);
      crux::Rational eps = parse_rational_flag(eps_text, "--eps");
      auto r = crux::np_gadget(g, k_int, eps);
      emit_json(r.to_json(), out_file);
    } else if (*dich) {
      auto cfg = load_config(config_file, seed);
      if (p_list.empty()) {
        double n = n_flag;
        p_list = {2.0 / n, 8.0 / n, std::pow(n, -0.6), std::pow(n, -0.4), 0.25};
      }
      auto report = crux::experiment_dichotomy(n_flag, p_list, trials, cfg);
      emit_json(report_with_csv(report, csv_file), out_file);
    } else if (*jung) {
      auto cfg = load_config(config_file, seed);
      auto report = crux::experiment_jung(a_flag, copies, cfg);
      emit_json(report_with_csv(report, csv_file), out_file);
    } else if (*bip) {
      auto report = crux::experiment_bipartite_obstruction(t_flag, c_flag, seed);
      emit_json(report_with_csv(report, csv_file), out_file);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
