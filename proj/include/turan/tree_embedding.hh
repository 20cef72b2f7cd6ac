#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "turan/blowup.hh"
#include "turan/digraph.hh"
#include "turan/subgraph.hh"

namespace turan {

/// Provenance of one block of the tree.
struct EmbeddingStep {
  std::size_t block = 0;        // index into x_partition
  std::size_t region = 0;       // 0 = U, j = copy W_j of the blow-up
  std::size_t family = 0;       // 1-based index of the family F_k used
  std::size_t copy = 0;         // index of the H-copy inside that family
  Vertex attach_tree = 0;       // tree vertex already embedded
  Vertex attach_block = 0;      // its neighbour inside this block
  bool red_attachment = false;  // attachment arc from U into W is red
  std::size_t disjoint_copies = 0;  // greedy S-disjoint collection size
};

struct EmbeddingCertificate {
  Embedding tree_map;  // T -> host
  std::vector<std::vector<Vertex>> x_partition;  // blocks X_1..X_k
  std::vector<EmbeddingStep> steps;
};

struct EmbeddingFailure {
  std::size_t step = 0;  // blocks embedded when no extension was found
  std::string reason;
};

using EmbedResult = std::variant<EmbeddingCertificate, EmbeddingFailure>;

/// Blocks of T under an embedding into the blow-up: maximal subtrees that stay
/// inside U or inside one copy W_j, ordered by BFS over the block tree from
/// the block of vertex 0, so each later block meets the earlier ones in
/// exactly one tree edge.
std::vector<std::vector<Vertex>> tree_blocks(const Graph& t,
                                             const Embedding& gamma_embedding,
                                             const BlowupResult& blowup);

/// Transfers an embedding of T in the blow-up into the host, block by block.
/// Block X_{i+1} is taken from a copy in F_{t-i} through the attachment
/// vertex; blocks inside some W_j additionally need the copy's S-part to
/// avoid every host vertex used so far, where S collects the classes of
/// vertices with a blue path to the attachment vertex. `families` are
/// F_1 ⊇ ... ⊇ F_t over one partition.
EmbedResult embed_tree(const Graph& t, const Embedding& gamma_embedding,
                       const BlowupResult& blowup,
                       std::span<const CopyFamily> families,
                       const ColouredDigraph& digraph);

}  // namespace turan
