#include "turan/blowup.hh"

#include <algorithm>
#include <bit>
#include <tuple>

#include "turan/errors.hh"
#include "turan/subgraph.hh"

namespace turan {

Vertex BlowupResult::vertex_of(Vertex v, std::size_t copy) const {
  const VertexMask below = (VertexMask{1} << v) - 1;
  if (identified & (VertexMask{1} << v))
    return static_cast<Vertex>(std::popcount(identified & below));
  if (copy == 0 || copy > copies)
    throw ValidationError("blow-up copy index out of range");
  const std::size_t u_count = std::popcount(identified);
  const std::size_t w_count = (phi.size() - u_count) / copies;
  const std::size_t w_rank = std::popcount(~identified & below);
  return static_cast<Vertex>(u_count + (copy - 1) * w_count + w_rank);
}

BlowupResult blow_up(const Graph& h, VertexMask identified, std::size_t t) {
  require_pattern(h, "H");
  if (t == 0) throw ValidationError("blow-up needs t >= 1");
  const std::size_t n = h.size();
  if (n < 32 && (identified >> n) != 0)
    throw ValidationError("U is not a subset of V(H)");

  const auto u_list = mask_to_vertices(identified);
  std::vector<Vertex> w_list;
  for (Vertex v = 0; v < n; ++v)
    if (!(identified & (VertexMask{1} << v))) w_list.push_back(v);

  BlowupResult out;
  out.identified = identified;
  out.copies = t;
  const std::size_t total = u_list.size() + t * w_list.size();
  if (total > kMaxHostVertices)
    throw UnsupportedSize("blow-up would have " + std::to_string(total) +
                          " vertices");
  for (Vertex u : u_list) {
    out.phi.push_back(u);
    out.copy_index.push_back(0);
  }
  for (std::size_t j = 1; j <= t; ++j)
    for (Vertex w : w_list) {
      out.phi.push_back(w);
      out.copy_index.push_back(j);
    }

  out.graph = Graph(total);
  for (const auto& [a, b] : h.edges()) {
    const bool a_in = identified & (VertexMask{1} << a);
    const bool b_in = identified & (VertexMask{1} << b);
    if (a_in && b_in) {
      out.graph.add_edge(out.vertex_of(a, 0), out.vertex_of(b, 0));
      continue;
    }
    for (std::size_t j = 1; j <= t; ++j)
      out.graph.add_edge(out.vertex_of(a, j), out.vertex_of(b, j));
  }
  return out;
}

BlowupResult blow_up(const Graph& h, std::span<const Vertex> identified,
                     std::size_t t) {
  for (Vertex v : identified)
    if (v >= h.size())
      throw ValidationError("U is not a subset of V(H): vertex " +
                            std::to_string(v));
  return blow_up(h, vertices_to_mask(identified), t);
}

std::size_t components_without(const Graph& h, VertexMask removed) {
  return connected_components_without(h, mask_to_vertices(removed)).size();
}

void require_tree_pattern(const Graph& t) {
  require_pattern(t, "T");
  if (!is_tree(t)) throw ValidationError("T is not a tree");
}

namespace {

bool blowup_is_t_free(const Graph& h, VertexMask u, const Graph& t) {
  return !contains_copy(blow_up(h, u, t.size()).graph, t).has_value();
}

}  // namespace

ExponentProfile exponent_r(const Graph& h, const Graph& t) {
  require_pattern(h, "H");
  require_tree_pattern(t);

  ExponentProfile profile;
  profile.t_used = t.size();
  if (contains_copy(h, t)) {
    profile.status = ExponentStatus::kZero;
    return profile;
  }

  struct Candidate {
    std::size_t components;
    VertexMask mask;
    std::vector<Vertex> vertices;
  };
  const VertexMask all = (VertexMask{1} << h.size()) - 1;
  std::vector<Candidate> candidates;
  for (VertexMask mask = 0; mask <= all; ++mask)
    candidates.push_back(
        {components_without(h, mask), mask, mask_to_vertices(mask)});
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              return std::forward_as_tuple(b.components, a.vertices.size(),
                                           a.vertices) <
                     std::forward_as_tuple(a.components, b.vertices.size(),
                                           b.vertices);
            });

  for (const auto& c : candidates)
    if (blowup_is_t_free(h, c.mask, t)) {
      profile.status = ExponentStatus::kFinite;
      profile.r = c.components;
      profile.witness_U = c.vertices;
      return profile;
    }
  // U = V(H) gives H itself, which is T-free here.
  throw InternalError("no T-free blow-up found although H is T-free");
}

ProfileCheck verify_profile(const Graph& h, const Graph& t,
                            const ExponentProfile& profile) {
  auto fail = [](std::string reason) {
    return ProfileCheck{false, std::move(reason)};
  };
  if (profile.t_used != t.size())
    return fail("t_used differs from |T|");
  const bool h_contains_t = contains_copy(h, t).has_value();
  if (profile.status == ExponentStatus::kZero)
    return h_contains_t ? ProfileCheck{true, ""}
                        : fail("status Zero but H is T-free");
  if (h_contains_t) return fail("H contains T; status must be Zero");
  if (profile.r > h.size()) return fail("r exceeds |H|");

  for (Vertex v : profile.witness_U)
    if (v >= h.size()) return fail("witness is not a subset of V(H)");
  const VertexMask witness = vertices_to_mask(profile.witness_U);
  if (std::popcount(witness) != static_cast<int>(profile.witness_U.size()))
    return fail("witness lists a vertex twice");
  if (components_without(h, witness) != profile.r)
    return fail("H minus witness does not have r components");
  if (!blowup_is_t_free(h, witness, t))
    return fail("witness blow-up contains T");

  const VertexMask all = (VertexMask{1} << h.size()) - 1;
  for (VertexMask mask = 0; mask <= all; ++mask)
    if (components_without(h, mask) > profile.r && blowup_is_t_free(h, mask, t))
      return fail("a subset with more components has a T-free blow-up");
  return {true, ""};
}

}  // namespace turan
