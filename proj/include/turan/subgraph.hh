#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "turan/bigint.hh"
#include "turan/graph.hh"

namespace turan {

/// Injective map from pattern vertices to host vertices; image[u] is the host
/// vertex that pattern vertex u lands on.
struct Embedding {
  std::vector<Vertex> image;

  auto operator<=>(const Embedding&) const = default;
};

bool is_valid_embedding(const Graph& host, const Graph& pattern,
                        const Embedding& e);

/// Partition {V_u} of the host vertices, one class per pattern vertex.
class LabelPartition {
 public:
  LabelPartition() = default;

  /// labels[x] is the class of host vertex x; every label must be < classes.
  static LabelPartition from_labels(std::vector<Vertex> labels,
                                    std::size_t classes);
  /// Throws ValidationError unless the classes are disjoint and cover
  /// 0..host_size-1.
  static LabelPartition from_classes(
      std::span<const std::vector<Vertex>> classes, std::size_t host_size);

  std::size_t class_count() const { return members_.size(); }
  std::size_t host_size() const { return labels_.size(); }
  Vertex label(Vertex x) const { return labels_[x]; }
  const std::vector<Vertex>& labels() const { return labels_; }
  const Row& members(Vertex cls) const { return members_[cls]; }
  std::vector<Vertex> class_vertices(Vertex cls) const;

  bool operator==(const LabelPartition&) const = default;

 private:
  std::vector<Vertex> labels_;
  std::vector<Row> members_;
};

/// A set of pattern copies in a host, one embedding per copy. With a
/// partition present every embedding is rainbow: pattern vertex u maps into
/// class u.
struct CopyFamily {
  std::shared_ptr<const Graph> host;
  std::shared_ptr<const Graph> pattern;
  std::vector<Embedding> embeddings;
  std::optional<LabelPartition> partition;
  bool truncated = false;

  std::size_t size() const { return embeddings.size(); }
  bool empty() const { return embeddings.empty(); }

  /// Same host, pattern and partition; no embeddings.
  CopyFamily empty_like() const;
};

/// Graph on the host's vertex set whose edges are the union of the family's
/// copies.
Graph union_graph(const CopyFamily& family);

/// Visits embeddings in search order; returning false from `visit` stops the
/// search. Pattern vertices are placed in BFS order from a highest-degree
/// vertex; candidates are the intersection of the placed neighbours' rows.
void for_each_embedding(const Graph& host, const Graph& pattern,
                        const LabelPartition* partition,
                        const std::function<bool(const Embedding&)>& visit);

std::optional<Embedding> contains_copy(const Graph& host,
                                       const Graph& pattern);

BigInt count_injective_homs(const Graph& host, const Graph& pattern);

/// All automorphisms of a pattern as permutations (sigma[u] = image of u),
/// sorted lexicographically; the identity comes first.
std::vector<std::vector<Vertex>> automorphisms(const Graph& pattern);
BigInt automorphism_count(const Graph& pattern);

/// Number of (not necessarily induced) subgraphs of host isomorphic to
/// pattern.
BigInt count_copies(const Graph& host, const Graph& pattern);

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// One embedding per copy: the lexicographically smallest among its
/// automorphic variants, or the unique rainbow embedding when a partition is
/// given. Sorted. Sets `truncated` if more than `cap` copies exist.
CopyFamily list_copies(const Graph& host, const Graph& pattern,
                       const std::optional<LabelPartition>& partition,
                       std::size_t cap = kNoCap);

}  // namespace turan
