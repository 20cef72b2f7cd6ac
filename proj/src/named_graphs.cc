#include "turan/named_graphs.hh"

namespace turan::named {

Graph path(std::size_t vertices) {
  Graph g(vertices);
  for (Vertex v = 1; v < vertices; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle(std::size_t vertices) {
  Graph g = path(vertices);
  if (vertices >= 3) g.add_edge(0, static_cast<Vertex>(vertices - 1));
  return g;
}

Graph complete(std::size_t vertices) {
  Graph g(vertices);
  for (Vertex u = 0; u < vertices; ++u)
    for (Vertex v = u + 1; v < vertices; ++v) g.add_edge(u, v);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.size() + b.size());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  const auto shift = static_cast<Vertex>(a.size());
  for (const auto& [u, v] : b.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

Graph copies(const Graph& g, std::size_t times) {
  Graph out;
  for (std::size_t i = 0; i < times; ++i) out = disjoint_union(out, g);
  return out;
}

}  // namespace turan::named
