#include "turan/digraph.hh"

#include <algorithm>
#include <bit>
#include <functional>

#include "turan/errors.hh"

namespace turan {

bool ColouredDigraph::has_arc(Vertex from, Vertex to) const {
  return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) {
    return a.from == from && a.to == to;
  });
}

bool ColouredDigraph::is_red(Vertex from, Vertex to) const {
  return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) {
    return a.from == from && a.to == to && a.colour == ArcColour::kRed;
  });
}

bool ColouredDigraph::is_blue(Vertex from, Vertex to) const {
  return std::any_of(arcs.begin(), arcs.end(), [&](const Arc& a) {
    return a.from == from && a.to == to && a.colour == ArcColour::kBlue;
  });
}

namespace {

// Tarjan's algorithm on the blue arcs.
std::vector<std::vector<Vertex>> strong_components(
    std::size_t n, const std::vector<std::vector<Vertex>>& out) {
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> parts;
  int counter = 0;

  std::function<void(Vertex)> visit = [&](Vertex v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Vertex w : out[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<Vertex> part;
      Vertex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        part.push_back(w);
      } while (w != v);
      std::sort(part.begin(), part.end());
      parts.push_back(std::move(part));
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

ColouredDigraph colour_digraph(const Graph& h,
                               std::span<const DirectedPair> red) {
  const std::size_t n = h.size();
  if (n > kMaxPatternVertices)
    throw UnsupportedSize("coloured digraph limited to pattern size");
  for (const auto& p : red) {
    if (p.from >= n || p.to >= n || !h.has_edge(p.from, p.to))
      throw ValidationError("red pair " + std::to_string(p.from) + "->" +
                            std::to_string(p.to) + " is not an edge of H");
    const auto count = std::count_if(red.begin(), red.end(), [&](const auto& q) {
      return (q.from == p.from && q.to == p.to) ||
             (q.from == p.to && q.to == p.from);
    });
    if (count != 1)
      throw ValidationError("red pairs list an edge more than once");
  }

  ColouredDigraph d;
  d.vertex_count = n;
  std::vector<std::vector<Vertex>> blue_out(n);
  for (const auto& [a, b] : h.edges())
    for (const auto& [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
      const bool is_red = std::find(red.begin(), red.end(),
                                    DirectedPair{from, to}) != red.end();
      d.arcs.push_back({from, to, is_red ? ArcColour::kRed : ArcColour::kBlue});
      if (!is_red) blue_out[from].push_back(to);
    }
  std::sort(d.arcs.begin(), d.arcs.end(), [](const Arc& x, const Arc& y) {
    return std::pair{x.from, x.to} < std::pair{y.from, y.to};
  });
  for (auto& targets : blue_out) std::sort(targets.begin(), targets.end());

  d.parts = strong_components(n, blue_out);
  d.part_of.assign(n, 0);
  for (std::size_t p = 0; p < d.parts.size(); ++p)
    for (Vertex v : d.parts[p]) d.part_of[v] = p;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : blue_out[v])
      if (d.part_of[v] != d.part_of[w])
        d.condensation.push_back({d.part_of[v], d.part_of[w]});
  std::sort(d.condensation.begin(), d.condensation.end());
  d.condensation.erase(std::unique(d.condensation.begin(), d.condensation.end()),
                       d.condensation.end());

  d.blue_reach.assign(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    VertexMask seen = VertexMask{1} << s;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : blue_out[queue[head]])
        if (!(seen & (VertexMask{1} << w))) {
          seen |= VertexMask{1} << w;
          queue.push_back(w);
        }
    d.blue_reach[s] = seen;
  }
  return d;
}

bool reaches_everything(const ColouredDigraph& d, VertexMask set) {
  VertexMask covered = 0;
  for (Vertex v : mask_to_vertices(set)) covered |= d.blue_reach[v];
  const VertexMask all = (VertexMask{1} << d.vertex_count) - 1;
  return covered == all;
}

std::size_t reach_sum(const ColouredDigraph& d, VertexMask set) {
  std::size_t sum = 0;
  for (Vertex v : mask_to_vertices(set)) sum += std::popcount(d.blue_reach[v]);
  return sum;
}

std::string check_selection(const ColouredDigraph& d, const ASelection& s) {
  const VertexMask a = vertices_to_mask(s.A);
  const VertexMask w = vertices_to_mask(s.W);
  const VertexMask all = (VertexMask{1} << d.vertex_count) - 1;
  if (!reaches_everything(d, a)) return "(a) some vertex is not reachable from A";
  if (reach_sum(d, a) != s.reach_sum) return "reach_sum does not match A";
  for (VertexMask other = 0; other <= all; ++other) {
    const auto size = static_cast<std::size_t>(std::popcount(other));
    if (size + 1 == s.A.size() && reaches_everything(d, other))
      return "(b) a smaller set reaches every vertex";
    if (size == s.A.size() && reaches_everything(d, other) &&
        reach_sum(d, other) > s.reach_sum)
      return "(c) a set of the same size has a larger reach sum";
  }

  VertexMask expected_w = 0;
  std::vector<int> per_part(d.parts.size(), 0);
  for (Vertex v : s.A) {
    if (++per_part[d.part_of[v]] > 1) return "(i) two vertices of A share a part";
    expected_w |= vertices_to_mask(d.parts[d.part_of[v]]);
  }
  if (w != expected_w) return "W is not the union of the parts meeting A";
  if (vertices_to_mask(s.U) != (all & ~w)) return "U is not the complement of W";
  for (const Arc& arc : d.arcs) {
    const bool from_w = w & (VertexMask{1} << arc.from);
    const bool to_w = w & (VertexMask{1} << arc.to);
    if (from_w && to_w && d.part_of[arc.from] != d.part_of[arc.to])
      return "(ii) an arc joins two parts inside W";
    if (!from_w && to_w && arc.colour == ArcColour::kBlue)
      return "(iii) a blue arc runs from U into W";
  }
  return {};
}

ASelection select_A(const ColouredDigraph& d) {
  std::vector<bool> has_incoming(d.parts.size(), false);
  for (const auto& [from, to] : d.condensation) has_incoming[to] = true;

  ASelection s;
  VertexMask w = 0;
  for (std::size_t p = 0; p < d.parts.size(); ++p)
    if (!has_incoming[p]) {
      s.A.push_back(d.parts[p].front());
      w |= vertices_to_mask(d.parts[p]);
    }
  std::sort(s.A.begin(), s.A.end());
  s.W = mask_to_vertices(w);
  for (Vertex v = 0; v < d.vertex_count; ++v)
    if (!(w & (VertexMask{1} << v))) s.U.push_back(v);
  s.reach_sum = reach_sum(d, vertices_to_mask(s.A));

  if (auto problem = check_selection(d, s); !problem.empty())
    throw InternalError("select_A: " + problem);
  return s;
}

}  // namespace turan
