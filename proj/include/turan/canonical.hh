#pragma once

#include <string>
#include <vector>

#include "turan/graph.hh"

namespace turan {

struct CanonicalLabelling {
  std::string graph6;
  std::vector<Vertex> perm;  // old vertex v becomes perm[v]
};

/// Lexicographically smallest graph6 string over all relabellings, found by
/// branch and bound over permutations. Limited to kMaxPatternVertices.
CanonicalLabelling canonical_labelling(const Graph& g);

inline std::string canonical_form(const Graph& g) {
  return canonical_labelling(g).graph6;
}

}  // namespace turan
