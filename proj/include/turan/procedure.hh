#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turan/bigint.hh"
#include "turan/graph.hh"
#include "turan/subgraph.hh"

namespace turan {

enum class ConstantsMode { kProofScale, kDeskScale };

/// Degree thresholds c_1 < ... < c_{e(H)} for the family refinement, with
/// c_0 = t. Proof scale uses the smallest constants satisfying
/// c_i >= t (h c_{i-1}^h + 1); desk scale takes user values and reports
/// threshold failures instead of raising them.
struct ProcedureConfig {
  std::vector<BigInt> constants;  // constants[i-1] = c_i
  ConstantsMode mode = ConstantsMode::kDeskScale;
  std::size_t t = 0;

  BigInt c(std::size_t i) const;

  static ProcedureConfig proof_scale(const Graph& h, std::size_t t);
  static ProcedureConfig desk_scale(std::vector<BigInt> constants,
                                    std::size_t t);
};

/// Checks length, strict monotonicity and (proof scale) the recursion.
void validate_config(const ProcedureConfig& config, const Graph& h);

/// Proof-scale constants grow doubly exponentially; refuse beyond this size.
inline constexpr unsigned kMaxConstantBits = 1u << 14;

struct RainbowStrategy {
  enum class Kind { kDerandomized, kRandom };
  Kind kind = Kind::kDerandomized;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

struct RainbowResult {
  LabelPartition partition;
  CopyFamily family;      // rainbow copies under `partition`
  BigInt total_copies;    // m = number of H-copies in G
  bool guarantee_met = false;  // |family| * h^h >= m
};

/// Labels every host vertex with a pattern vertex so that many copies become
/// rainbow. The derandomized strategy fixes labels vertex by vertex, each
/// time maximising the expected number of rainbow embeddings when the
/// remaining labels are uniform; the expectation never drops below
/// homs / h^h >= m / h^h.
RainbowResult rainbow_partition(const Graph& g, const Graph& h,
                                const RainbowStrategy& strategy = {});

struct PopularOrdering {
  std::vector<Vertex> order;  // pattern vertices, earliest first
  std::vector<std::size_t> rank;  // rank[u] = index of u in order
  CopyFamily family;
};

/// Each copy inherits an order of V(H) from the host ordering; keeps the
/// copies with the most frequent order (ties: lexicographically smallest).
PopularOrdering popular_ordering(const CopyFamily& family,
                                 const VertexOrdering& ordering);

struct TraceStep {
  enum class Branch { kFilter, kRestrict };

  std::size_t i = 0;
  std::size_t j = 0;
  Branch branch = Branch::kFilter;
  std::size_t family_size = 0;
  std::size_t kept = 0;
  std::size_t red_count = 0;  // |E_i|
  std::vector<std::pair<DirectedPair, std::size_t>> b_sizes;
  std::optional<DirectedPair> removed;
  bool retention_ok = false;
};

struct SparseBound {
  std::size_t components = 0;  // a
  std::size_t host_size = 0;   // n
  BigInt counted;              // |F|
  BigInt bound;                // c_{l-1}^{h^2} n^a
  bool holds = false;
};

struct ProcedureOutcome {
  enum class Kind { kSparse, kStructured };

  Kind kind = Kind::kSparse;
  std::size_t l = 0;
  std::vector<DirectedPair> remaining_red;  // E_l
  /// Structured: F_1 ⊇ ... ⊇ F_t. Sparse: the single final family.
  std::vector<CopyFamily> families;
  std::vector<TraceStep> trace;
  std::optional<SparseBound> sparse_bound;
};

/// Runs the refinement loop on a rainbow family with inherited order
/// `order_h`. E_1 holds (u, w) for every edge with u after w; pairs are
/// scanned in sorted order. Each round either keeps the copies avoiding all
/// low-degree sets B_e (at least half), or restricts to the copies meeting
/// the first B_e that holds at least 1/(2|E_i|) of them and drops e.
ProcedureOutcome refine_families(const CopyFamily& family,
                                 std::span<const Vertex> order_h,
                                 const ProcedureConfig& config);

}  // namespace turan
