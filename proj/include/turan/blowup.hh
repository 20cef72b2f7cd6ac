#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "turan/graph.hh"

namespace turan {

/// The (U, t)-blow-up of H: t copies of H glued along U. Vertex numbering is
/// U first (index order), then copy 1, ..., copy t, each listing V(H) \ U in
/// index order.
struct BlowupResult {
  Graph graph;
  std::vector<Vertex> phi;              // blow-up vertex -> vertex of H
  std::vector<std::size_t> copy_index;  // 0 for U, otherwise 1..t
  VertexMask identified = 0;
  std::size_t copies = 0;

  /// The blow-up vertex standing for H-vertex v in copy j (j ignored for U).
  Vertex vertex_of(Vertex v, std::size_t copy) const;
};

BlowupResult blow_up(const Graph& h, VertexMask identified, std::size_t t);
BlowupResult blow_up(const Graph& h, std::span<const Vertex> identified,
                     std::size_t t);

enum class ExponentStatus { kFinite, kZero };

struct ExponentProfile {
  ExponentStatus status = ExponentStatus::kFinite;
  std::size_t r = 0;                // meaningful only when kFinite
  std::vector<Vertex> witness_U;    // sorted
  std::size_t t_used = 0;

  bool operator==(const ExponentProfile&) const = default;
};

/// Number of components of H once `removed` is deleted.
std::size_t components_without(const Graph& h, VertexMask removed);

/// Largest component count of H \ U over U whose (U, |T|)-blow-up is T-free.
/// Zero when H itself contains T. The witness is the qualifying U with the
/// fewest vertices, ties broken by comparing sorted vertex lists.
ExponentProfile exponent_r(const Graph& h, const Graph& t);

struct ProfileCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Re-derives every claim of `profile` from scratch.
ProfileCheck verify_profile(const Graph& h, const Graph& t,
                            const ExponentProfile& profile);

/// Validates T as a forbidden tree pattern.
void require_tree_pattern(const Graph& t);

}  // namespace turan
