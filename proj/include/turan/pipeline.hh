#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "turan/bigint.hh"
#include "turan/blowup.hh"
#include "turan/digraph.hh"
#include "turan/procedure.hh"
#include "turan/tree_embedding.hh"

namespace turan {

/// One quantitative guarantee checked on the instance: holds iff
/// lhs >= rhs (kAtLeast) or lhs <= rhs (kAtMost).
struct ThresholdCheck {
  enum class Relation { kAtLeast, kAtMost };

  std::string name;
  BigInt lhs;
  BigInt rhs;
  Relation relation = Relation::kAtLeast;
  bool holds = false;
};

struct PipelineReport {
  std::size_t h = 0;
  std::size_t t = 0;
  std::size_t host_size = 0;
  BigInt total_copies;  // m
  std::string stage;    // last stage reached

  std::size_t rainbow_copies = 0;   // |H_0|
  std::size_t degeneracy = 0;
  std::vector<Vertex> order_h;
  std::size_t ordered_copies = 0;   // |H_1|
  std::optional<ProcedureOutcome> outcome;

  // Sparse branch.
  std::size_t components = 0;            // a
  std::optional<ExponentProfile> profile;

  // Structured branch.
  std::optional<ColouredDigraph> digraph;
  std::optional<ASelection> selection;
  std::size_t blowup_size = 0;
  bool blowup_contains_t = false;
  std::optional<EmbeddingCertificate> t_copy;
  std::optional<EmbeddingFailure> embedding_failure;

  std::vector<ThresholdCheck> checks;
  std::vector<std::string> flags;

  bool input_t_free_violated() const { return t_copy.has_value(); }
};

/// Chains rainbow partition, degeneracy ordering, popular ordering and
/// family refinement on G, then either checks the sparse counting bound or
/// builds the red/blue digraph, selects A, and tries to pull a copy of T out
/// of G through the (U, t)-blow-up. Stage failures are rethrown with the
/// stage name. In proof-scale mode a failed unconditional threshold raises
/// InternalError; everything else that fails becomes a flag.
PipelineReport run_pipeline(const Graph& g, const Graph& h, const Graph& t,
                            const ProcedureConfig& config);

}  // namespace turan
