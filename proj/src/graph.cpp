#include "crux/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crux {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<int> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out));
  VertexSet result;
  result.ids_ = std::move(out);
  return result;
}

VertexSet VertexSet::set_minus(const VertexSet& other) const {
  std::vector<int> out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                      other.ids_.end(), std::back_inserter(out));
  VertexSet result;
  result.ids_ = std::move(out);
  return result;
}

VertexSet VertexSet::set_intersect(const VertexSet& other) const {
  std::vector<int> out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
  VertexSet result;
  result.ids_ = std::move(out);
  return result;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: vertex id out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("graph: duplicate edge");
  }
  m_ = edges.size();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("graph: vertex id " + std::to_string(v) +
                            " out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) {
    int d = static_cast<int>(adj_[v].size());
    if (v == 0 || d < best) best = d;
  }
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v)
    best = std::max(best, static_cast<int>(adj_[v].size()));
  return best;
}

Rational Graph::average_degree() const {
  if (n_ == 0) throw std::domain_error("average_degree: empty graph");
  return Rational(2 * static_cast<std::int64_t>(m_), n_);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  std::vector<int> to_parent = vertices.ids();
  std::vector<int> to_child(g.vertex_count(), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    int v = to_parent[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("induced_subgraph: vertex id out of range");
    to_child[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (int u : to_parent)
    for (int v : g.neighbors(u))
      if (u < v && to_child[v] >= 0)
        edges.emplace_back(to_child[u], to_child[v]);
  return {Graph(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

std::vector<int> compose_maps(const std::vector<int>& outer,
                              const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer.at(inner[i]);
  return out;
}

VertexSet external_neighborhood(const Graph& g, const VertexSet& x) {
  std::vector<char> in_x(g.vertex_count(), 0);
  for (int v : x) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("external_neighborhood: vertex id out of range");
    in_x[v] = 1;
  }
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> out;
  for (int v : x)
    for (int w : g.neighbors(v))
      if (!in_x[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  return VertexSet(std::move(out));
}

std::size_t edge_boundary(const Graph& g, const VertexSet& s) {
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::out_of_range("edge_boundary: vertex id out of range");
    in_s[v] = 1;
  }
  std::size_t count = 0;
  for (int v : s)
    for (int w : g.neighbors(v))
      if (!in_s[w]) ++count;
  return count;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> members;
    stack.push_back(start);
    label[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : g.neighbors(v))
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
    }
    out.push_back(VertexSet(std::move(members)));
  }
  return out;
}

bool is_path_in(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    int v = p.vertices[i];
    if (v < 0 || v >= g.vertex_count()) return false;
    if (seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return true;
}

Graph disjoint_union_graphs(const std::vector<Graph>& parts) {
  int n = 0;
  std::vector<Edge> edges;
  for (const Graph& part : parts) {
    for (const auto& [u, v] : part.edges()) edges.emplace_back(u + n, v + n);
    n += part.vertex_count();
  }
  return Graph(n, edges);
}

Graph blowup_graph(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("blowup: multiplicity must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * static_cast<std::size_t>(s) * s);
  for (const auto& [u, v] : g.edges())
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        edges.emplace_back(u * s + i, v * s + j);
  return Graph(g.vertex_count() * s, edges);
}

}  // namespace crux
