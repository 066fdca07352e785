#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "crux/graph.hpp"

namespace crux {

// Declarative description of a generated graph, JSON round-trippable so CLI
// runs are reproducible from the report alone. disjoint_union composes over
// `parts`; blowup keeps its inner spec as parts[0].
struct GraphSpec {
  enum class Kind {
    Gnp,
    Hypercube,
    Complete,
    CompleteBipartite,
    DisjointUnion,
    Blowup,
    Petersen,
    Cycle,
  };

  Kind kind = Kind::Complete;
  int n = 0;
  int dim = 0;
  int a = 0;
  int b = 0;
  int s = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::vector<GraphSpec> parts;

  static GraphSpec gnp(int n, double p, std::uint64_t seed);
  static GraphSpec hypercube(int dim);
  static GraphSpec complete(int n);
  static GraphSpec complete_bipartite(int a, int b);
  static GraphSpec disjoint_union(std::vector<GraphSpec> parts);
  static GraphSpec blowup(GraphSpec inner, int s);
  static GraphSpec petersen();
  static GraphSpec cycle(int n);

  static GraphSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

Graph generate(const GraphSpec& spec);

// G(n, p) with the documented sampling rule: edges examined in lexicographic
// (u, v) order, u < v, each kept when the next [0,1) draw from mt19937_64
// falls below p. Identical output for identical (n, p, seed) everywhere.
Graph generate_gnp(int n, double p, std::uint64_t seed);

Graph generate_hypercube(int dim);
Graph generate_complete(int n);
Graph generate_complete_bipartite(int a, int b);
Graph generate_petersen();
Graph generate_cycle(int n);

}  // namespace crux
