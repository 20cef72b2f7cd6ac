#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace turan {

using Vertex = std::uint32_t;
using Row = boost::dynamic_bitset<std::uint64_t>;

/// Subset of a pattern's vertices; bit v set means v is in the set.
using VertexMask = std::uint32_t;

inline constexpr std::size_t kMaxPatternVertices = 10;
inline constexpr std::size_t kMaxHostVertices = 65536;

struct Edge {
  Vertex u;
  Vertex v;

  auto operator<=>(const Edge&) const = default;
};

/// Ordered pair (from, to) of pattern vertices; an oriented edge.
struct DirectedPair {
  Vertex from;
  Vertex to;

  auto operator<=>(const DirectedPair&) const = default;
};

/// Undirected simple graph on vertices 0..n-1 stored as bitset adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Throws ValidationError on self-loops, duplicate edges or out-of-range
  /// endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return rows_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Row& row(Vertex u) const { return rows_[u]; }
  std::size_t degree(Vertex u) const { return rows_[u].count(); }

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  std::vector<Vertex> neighbours(Vertex u) const;
  /// All edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_isolated_vertex() const;

  /// Subgraph induced on `vertices`; new vertex i is old vertex vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Relabels old vertex v as new vertex perm[v].
  Graph relabelled(std::span<const Vertex> perm) const;

  /// Copy of this graph with isolated vertices appended up to `n` vertices.
  Graph padded(std::size_t n) const;

  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

 private:
  std::vector<Row> rows_;
  std::size_t edge_count_ = 0;
};

/// Rejects graphs that cannot serve as H or T: empty, over the pattern cap,
/// or with an isolated vertex.
void require_pattern(const Graph& g, std::string_view role);

std::vector<Vertex> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(std::span<const Vertex> vertices);

struct VertexOrdering {
  std::vector<Vertex> order;
  std::vector<std::size_t> position;  // position[v] = index of v in order
  std::size_t bound = 0;
};

/// Largest number of neighbours any vertex has later in `order`.
std::size_t max_back_degree(const Graph& g, std::span<const Vertex> order);

/// Smallest-last ordering: repeatedly removes a minimum-degree vertex (lowest
/// index on ties). Every vertex has at most `bound` neighbours after it, and
/// `bound` equals the degeneracy of g.
VertexOrdering degeneracy_ordering(const Graph& g);

struct ComponentPartition {
  std::vector<std::vector<Vertex>> parts;

  std::size_t size() const { return parts.size(); }
};

/// Parts sorted by smallest contained vertex; each part sorted.
ComponentPartition connected_components(const Graph& g);

/// Components of g with `removed` deleted, in the original vertex labels.
ComponentPartition connected_components_without(const Graph& g,
                                                std::span<const Vertex> removed);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace turan
