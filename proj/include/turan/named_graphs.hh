#pragma once

#include <cstddef>

#include "turan/graph.hh"

namespace turan::named {

Graph path(std::size_t vertices);          // P_n, vertices 0-1-...-(n-1)
Graph cycle(std::size_t vertices);         // C_n
Graph complete(std::size_t vertices);      // K_n
Graph star(std::size_t leaves);            // K_{1,k}, centre 0
Graph disjoint_union(const Graph& a, const Graph& b);
Graph copies(const Graph& g, std::size_t times);

}  // namespace turan::named
