#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hh"

namespace turan {

enum class ArcColour { kRed, kBlue };

struct Arc {
  Vertex from;
  Vertex to;
  ArcColour colour;
};

/// Both orientations of every edge of H; an arc is red iff it is one of the
/// surviving ordered pairs. Parts are the strongly connected components of
/// the blue arcs.
struct ColouredDigraph {
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;  // sorted by (from, to)
  std::vector<std::vector<Vertex>> parts;  // sorted by smallest vertex
  std::vector<std::size_t> part_of;
  std::vector<std::pair<std::size_t, std::size_t>> condensation;  // part arcs
  std::vector<VertexMask> blue_reach;  // includes the vertex itself

  bool has_arc(Vertex from, Vertex to) const;
  bool is_red(Vertex from, Vertex to) const;
  bool is_blue(Vertex from, Vertex to) const;
};

ColouredDigraph colour_digraph(const Graph& h, std::span<const DirectedPair> red);

struct ASelection {
  std::vector<Vertex> A;
  std::vector<Vertex> W;
  std::vector<Vertex> U;
  std::size_t reach_sum = 0;
};

/// Every vertex is blue-reachable from some member of the set.
bool reaches_everything(const ColouredDigraph& d, VertexMask set);
std::size_t reach_sum(const ColouredDigraph& d, VertexMask set);

/// Empty if the selection satisfies reachability, minimum size, maximum
/// reach sum among minimum sets, one vertex per part, no arcs between parts
/// inside W and no blue arc from U into W; otherwise the first violation.
std::string check_selection(const ColouredDigraph& d, const ASelection& s);

/// A = lowest vertex of every source part of the blue condensation. Throws
/// InternalError if the result fails check_selection.
ASelection select_A(const ColouredDigraph& d);

}  // namespace turan
