#include "turan/graph.hh"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "turan/errors.hh"

namespace turan {

Graph::Graph(std::size_t n) {
  if (n > kMaxHostVertices)
    throw UnsupportedSize("graph has " + std::to_string(n) +
                          " vertices, cap is " +
                          std::to_string(kMaxHostVertices));
  rows_.assign(n, Row(n));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw ValidationError("edge " + std::to_string(u) + "-" +
                            std::to_string(v) + " out of range for n=" +
                            std::to_string(n));
    if (u == v)
      throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (!g.add_edge(u, v))
      throw ValidationError("duplicate edge " + std::to_string(u) + "-" +
                            std::to_string(v));
  }
  return g;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size())
    throw ValidationError("edge endpoint out of range");
  if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return false;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  if (u >= size() || v >= size() || !rows_[u].test(v)) return false;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --edge_count_;
  return true;
}

std::vector<Vertex> Graph::neighbours(Vertex u) const {
  std::vector<Vertex> out;
  out.reserve(rows_[u].count());
  for (auto w = rows_[u].find_first(); w != Row::npos; w = rows_[u].find_next(w))
    out.push_back(static_cast<Vertex>(w));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (auto w = rows_[u].find_next(u); w != Row::npos;
         w = rows_[u].find_next(w))
      out.push_back({u, static_cast<Vertex>(w)});
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(rows_.begin(), rows_.end(),
                     [](const Row& r) { return r.none(); });
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j]))
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
  if (perm.size() != size())
    throw ValidationError("permutation size does not match graph");
  Graph g(size());
  for (const auto& [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph Graph::padded(std::size_t n) const {
  if (n < size()) throw ValidationError("cannot pad to fewer vertices");
  Graph g(n);
  for (const auto& [u, v] : edges()) g.add_edge(u, v);
  return g;
}

void require_pattern(const Graph& g, std::string_view role) {
  const std::string name(role);
  if (g.size() == 0) throw ValidationError(name + " has no vertices");
  if (g.size() > kMaxPatternVertices)
    throw UnsupportedSize(name + " has " + std::to_string(g.size()) +
                          " vertices, pattern cap is " +
                          std::to_string(kMaxPatternVertices));
  if (g.has_isolated_vertex())
    throw ValidationError(name + " has an isolated vertex");
}

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

VertexMask vertices_to_mask(std::span<const Vertex> vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) mask |= VertexMask{1} << v;
  return mask;
}

std::size_t max_back_degree(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> position(g.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  std::size_t worst = 0;
  for (Vertex u = 0; u < g.size(); ++u) {
    std::size_t later = 0;
    for (Vertex w : g.neighbours(u))
      if (position[w] > position[u]) ++later;
    worst = std::max(worst, later);
  }
  return worst;
}

VertexOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.insert({degree[v], v});
  }

  VertexOrdering result;
  result.order.reserve(n);
  result.position.assign(n, 0);
  std::vector<bool> removed(n, false);
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    result.bound = std::max(result.bound, d);
    result.position[v] = result.order.size();
    result.order.push_back(v);
    removed[v] = true;
    for (Vertex w : g.neighbours(v)) {
      if (removed[w]) continue;
      queue.erase({degree[w], w});
      --degree[w];
      queue.insert({degree[w], w});
    }
  }
  return result;
}

namespace {

ComponentPartition components_of(const Graph& g, std::vector<bool> skip) {
  ComponentPartition out;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (skip[s]) continue;
    std::vector<Vertex> part{s};
    skip[s] = true;
    for (std::size_t head = 0; head < part.size(); ++head)
      for (Vertex w : g.neighbours(part[head]))
        if (!skip[w]) {
          skip[w] = true;
          part.push_back(w);
        }
    std::sort(part.begin(), part.end());
    out.parts.push_back(std::move(part));
  }
  return out;
}

}  // namespace

ComponentPartition connected_components(const Graph& g) {
  return components_of(g, std::vector<bool>(g.size(), false));
}

ComponentPartition connected_components_without(
    const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> skip(g.size(), false);
  for (Vertex v : removed) skip.at(v) = true;
  return components_of(g, std::move(skip));
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

bool is_tree(const Graph& g) {
  return g.size() > 0 && g.edge_count() + 1 == g.size() && is_connected(g);
}

}  // namespace turan
