#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "crux/rational.hpp"

namespace crux {

using Edge = std::pair<int, int>;

// Sorted set of vertex ids. Small wrapper over a sorted unique vector; the
// algorithms convert to bitmask form internally when they need O(1) lookups.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> ids);

  static VertexSet of(std::initializer_list<int> ids) {
    return VertexSet(std::vector<int>(ids));
  }

  bool contains(int v) const;
  void insert(int v);
  void erase(int v);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_minus(const VertexSet& other) const;
  VertexSet set_intersect(const VertexSet& other) const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.ids_ == b.ids_;
  }

 private:
  std::vector<int> ids_;
};

// A walk given as a vertex sequence; valid paths have no repeats and
// consecutive vertices adjacent in the host graph. Length counts edges.
struct Path {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Immutable simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  // Validates the edge list: endpoints in range, no loops, no duplicates
  // (either orientation counts as a duplicate).
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  int min_degree() const;
  int max_degree() const;

  // 2e/n, exact. Throws on the empty graph.
  Rational average_degree() const;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Induced subgraph together with the map from its vertex ids back to the
// parent graph's ids, so certificates found inside lift to the original.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Composes child->parent maps: result[i] = outer[inner[i]].
std::vector<int> compose_maps(const std::vector<int>& outer,
                              const std::vector<int>& inner);

// N(X) \ X.
VertexSet external_neighborhood(const Graph& g, const VertexSet& x);

// Number of edges with exactly one endpoint in s.
std::size_t edge_boundary(const Graph& g, const VertexSet& s);

std::vector<VertexSet> connected_components(const Graph& g);

bool is_path_in(const Graph& g, const Path& p);

Graph disjoint_union_graphs(const std::vector<Graph>& parts);

// Replaces every vertex by s copies; copies of adjacent vertices are fully
// joined, copies of the same vertex stay non-adjacent.
Graph blowup_graph(const Graph& g, int s);

}  // namespace crux
