#include "crux/generators.hpp"

#include <stdexcept>

#include "crux/rng.hpp"

namespace crux {

namespace {

const char* kind_name(GraphSpec::Kind kind) {
  switch (kind) {
    case GraphSpec::Kind::Gnp: return "gnp";
    case GraphSpec::Kind::Hypercube: return "hypercube";
    case GraphSpec::Kind::Complete: return "complete";
    case GraphSpec::Kind::CompleteBipartite: return "complete_bipartite";
    case GraphSpec::Kind::DisjointUnion: return "disjoint_union";
    case GraphSpec::Kind::Blowup: return "blowup";
    case GraphSpec::Kind::Petersen: return "petersen";
    case GraphSpec::Kind::Cycle: return "cycle";
  }
  return "?";
}

GraphSpec::Kind kind_from_name(const std::string& name) {
  using Kind = GraphSpec::Kind;
  if (name == "gnp") return Kind::Gnp;
  if (name == "hypercube") return Kind::Hypercube;
  if (name == "complete") return Kind::Complete;
  if (name == "complete_bipartite") return Kind::CompleteBipartite;
  if (name == "disjoint_union") return Kind::DisjointUnion;
  if (name == "blowup") return Kind::Blowup;
  if (name == "petersen") return Kind::Petersen;
  if (name == "cycle") return Kind::Cycle;
  throw std::invalid_argument("graph spec: unknown kind '" + name + "'");
}

}  // namespace

GraphSpec GraphSpec::gnp(int n, double p, std::uint64_t seed) {
  GraphSpec spec;
  spec.kind = Kind::Gnp;
  spec.n = n;
  spec.p = p;
  spec.seed = seed;
  return spec;
}

GraphSpec GraphSpec::hypercube(int dim) {
  GraphSpec spec;
  spec.kind = Kind::Hypercube;
  spec.dim = dim;
  return spec;
}

GraphSpec GraphSpec::complete(int n) {
  GraphSpec spec;
  spec.kind = Kind::Complete;
  spec.n = n;
  return spec;
}

GraphSpec GraphSpec::complete_bipartite(int a, int b) {
  GraphSpec spec;
  spec.kind = Kind::CompleteBipartite;
  spec.a = a;
  spec.b = b;
  return spec;
}

GraphSpec GraphSpec::disjoint_union(std::vector<GraphSpec> parts) {
  GraphSpec spec;
  spec.kind = Kind::DisjointUnion;
  spec.parts = std::move(parts);
  return spec;
}

GraphSpec GraphSpec::blowup(GraphSpec inner, int s) {
  GraphSpec spec;
  spec.kind = Kind::Blowup;
  spec.s = s;
  spec.parts.push_back(std::move(inner));
  return spec;
}

GraphSpec GraphSpec::petersen() {
  GraphSpec spec;
  spec.kind = Kind::Petersen;
  return spec;
}

GraphSpec GraphSpec::cycle(int n) {
  GraphSpec spec;
  spec.kind = Kind::Cycle;
  spec.n = n;
  return spec;
}

GraphSpec GraphSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("graph spec: expected object with 'kind'");
  GraphSpec spec;
  spec.kind = kind_from_name(j.at("kind").get<std::string>());
  switch (spec.kind) {
    case Kind::Gnp:
      spec.n = j.at("n").get<int>();
      spec.p = j.at("p").get<double>();
      spec.seed = j.value("seed", std::uint64_t{0});
      break;
    case Kind::Hypercube:
      spec.dim = j.at("dim").get<int>();
      break;
    case Kind::Complete:
    case Kind::Cycle:
      spec.n = j.at("n").get<int>();
      break;
    case Kind::CompleteBipartite:
      spec.a = j.at("a").get<int>();
      spec.b = j.at("b").get<int>();
      break;
    case Kind::DisjointUnion:
      for (const auto& part : j.at("parts"))
        spec.parts.push_back(from_json(part));
      break;
    case Kind::Blowup:
      spec.s = j.at("s").get<int>();
      spec.parts.push_back(from_json(j.at("inner")));
      break;
    case Kind::Petersen:
      break;
  }
  return spec;
}

nlohmann::json GraphSpec::to_json() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind);
  switch (kind) {
    case Kind::Gnp:
      j["n"] = n;
      j["p"] = p;
      j["seed"] = seed;
      break;
    case Kind::Hypercube:
      j["dim"] = dim;
      break;
    case Kind::Complete:
    case Kind::Cycle:
      j["n"] = n;
      break;
    case Kind::CompleteBipartite:
      j["a"] = a;
      j["b"] = b;
      break;
    case Kind::DisjointUnion: {
      nlohmann::json parts_json = nlohmann::json::array();
      for (const auto& part : parts) parts_json.push_back(part.to_json());
      j["parts"] = std::move(parts_json);
      break;
    }
    case Kind::Blowup:
      j["s"] = s;
      j["inner"] = parts.at(0).to_json();
      break;
    case Kind::Petersen:
      break;
  }
  return j;
}

Graph generate_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnp: negative n");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p outside [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph generate_hypercube(int dim) {
  if (dim < 0 || dim > 20) throw std::invalid_argument("hypercube: bad dimension");
  int n = 1 << dim;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int bit = 0; bit < dim; ++bit) {
      int v = u ^ (1 << bit);
      if (u < v) edges.emplace_back(u, v);
    }
  return Graph(n, edges);
}

Graph generate_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph generate_complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative side");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph generate_petersen() {
  // Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -- i+5.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  std::vector<Edge> normalized;
  for (auto [u, v] : edges)
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(10, normalized);
}

Graph generate_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph generate(const GraphSpec& spec) {
  switch (spec.kind) {
    case GraphSpec::Kind::Gnp:
      return generate_gnp(spec.n, spec.p, spec.seed);
    case GraphSpec::Kind::Hypercube:
      return generate_hypercube(spec.dim);
    case GraphSpec::Kind::Complete:
      return generate_complete(spec.n);
    case GraphSpec::Kind::CompleteBipartite:
      return generate_complete_bipartite(spec.a, spec.b);
    case GraphSpec::Kind::DisjointUnion: {
      std::vector<Graph> parts;
      parts.reserve(spec.parts.size());
      for (const auto& part : spec.parts) parts.push_back(generate(part));
      return disjoint_union_graphs(parts);
    }
    case GraphSpec::Kind::Blowup:
      return blowup_graph(generate(spec.parts.at(0)), spec.s);
    case GraphSpec::Kind::Petersen:
      return generate_petersen();
    case GraphSpec::Kind::Cycle:
      return generate_cycle(spec.n);
  }
  throw std::logic_error("generate: unhandled spec kind");
}

}  // namespace crux
