#include <random>

#include <gtest/gtest.h>

#include "../oracles.hh"
#include "turan/errors.hh"
#include "turan/graph.hh"
#include "turan/named_graphs.hh"
#include "turan/subgraph.hh"

using namespace turan;

TEST(Graph, FromEdgesRejectsBadInput) {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), ValidationError);
  EXPECT_THROW(Graph::from_edges(3, dup), ValidationError);
  EXPECT_THROW(Graph::from_edges(3, range), ValidationError);
  EXPECT_THROW(Graph(kMaxHostVertices + 1), UnsupportedSize);
}

TEST(Graph, BasicAccessors) {
  Graph g(4);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_TRUE(g.add_edge(2, 1));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_TRUE(g.has_isolated_vertex());
  EXPECT_EQ(g.neighbours(1), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(g.remove_edge(0, 1));
  EXPECT_FALSE(g.remove_edge(0, 1));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, RelabelInducePad) {
  const Graph p = named::path(3);
  const std::vector<Vertex> perm{1, 0, 2};
  const Graph q = p.relabelled(perm);
  EXPECT_TRUE(q.has_edge(1, 0));
  EXPECT_TRUE(q.has_edge(0, 2));
  EXPECT_FALSE(q.has_edge(1, 2));
  const std::vector<Vertex> keep{1, 2};
  EXPECT_EQ(p.induced(keep), named::complete(2));
  EXPECT_EQ(p.padded(5).size(), 5u);
  EXPECT_EQ(p.padded(5).edge_count(), 2u);
  EXPECT_THROW(p.padded(2), ValidationError);
}

TEST(Graph, RequirePattern) {
  EXPECT_NO_THROW(require_pattern(named::path(3), "H"));
  EXPECT_THROW(require_pattern(Graph(0), "H"), ValidationError);
  EXPECT_THROW(require_pattern(Graph(2), "H"), ValidationError);
  EXPECT_THROW(require_pattern(named::path(11), "H"), UnsupportedSize);
}

TEST(Graph, MaskRoundTrip) {
  const std::vector<Vertex> vs{0, 3, 5};
  EXPECT_EQ(vertices_to_mask(vs), 0b101001u);
  EXPECT_EQ(mask_to_vertices(0b101001u), vs);
}

TEST(Graph, IsTreeExamples) {
  EXPECT_TRUE(is_tree(named::path(3)));
  EXPECT_FALSE(is_tree(named::complete(3)));
  EXPECT_FALSE(is_tree(named::copies(named::complete(2), 2)));
  EXPECT_TRUE(is_tree(named::star(5)));
  EXPECT_FALSE(is_tree(Graph(0)));
}

TEST(Graph, ComponentExamples) {
  const std::vector<Vertex> centre{1};
  EXPECT_EQ(connected_components_without(named::path(3), centre).size(), 2u);
  EXPECT_EQ(connected_components(named::complete(3)).size(), 1u);
  const auto parts = connected_components(named::copies(named::complete(3), 3));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts.parts[1], (std::vector<Vertex>{3, 4, 5}));
}

TEST(Graph, ComponentsMatchUnionFind) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + rng() % 12, 0.2, rng);
    EXPECT_EQ(connected_components(g).size(), oracle::components(g, 0));
    EXPECT_EQ(is_connected(g), oracle::components(g, 0) == 1);
  }
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy_ordering(named::path(6)).bound, 1u);
  EXPECT_EQ(degeneracy_ordering(named::star(4)).bound, 1u);
  EXPECT_EQ(degeneracy_ordering(named::complete(4)).bound, 3u);
  EXPECT_EQ(degeneracy_ordering(named::cycle(5)).bound, 2u);
  EXPECT_EQ(oracle::degeneracy(named::complete(4)), 3u);
  EXPECT_EQ(oracle::degeneracy(named::cycle(5)), 2u);
}

TEST(Degeneracy, OptimalOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::mt19937_64 rng(n);
    const std::uint64_t total = std::uint64_t{1} << oracle::pair_count(n);
    // exhaustive up to 5 vertices, a sample at 6
    const std::uint64_t step = n <= 5 ? 1 : 97;
    for (std::uint64_t code = 0; code < total; code += step) {
      const Graph g = oracle::from_code(n, code);
      const auto ord = degeneracy_ordering(g);
      ASSERT_EQ(ord.order.size(), n);
      EXPECT_EQ(max_back_degree(g, ord.order), ord.bound);
      EXPECT_EQ(ord.bound, oracle::degeneracy(g));
      for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(ord.position[ord.order[k]], k);
    }
  }
}

TEST(Degeneracy, RandomOrdersNeverBeatTheBoundAtSevenVertices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(7, 0.45, rng);
    const auto bound = degeneracy_ordering(g).bound;
    for (int k = 0; k < 50; ++k) {
      const auto order = oracle::random_permutation(7, rng);
      EXPECT_GE(max_back_degree(g, order), bound);
    }
  }
}

TEST(Degeneracy, TreeFreeGraphsAreSparse) {
  // a graph of minimum degree >= t-1 contains every tree on t vertices
  const std::vector<Graph> trees{named::path(3), named::path(4), named::star(3)};
  for (const Graph& t : trees)
    for (std::size_t n = 1; n <= 6; ++n)
      oracle::for_each_labelled(n, [&](const Graph& g) {
        if (contains_copy(g, t)) return;
        EXPECT_LE(degeneracy_ordering(g).bound + 2, t.size());
      });
}

TEST(NamedGraphs, Shapes) {
  EXPECT_EQ(named::cycle(5).edge_count(), 5u);
  EXPECT_EQ(named::complete(5).edge_count(), 10u);
  EXPECT_EQ(named::star(4).degree(0), 4u);
  const Graph u = named::disjoint_union(named::path(2), named::path(3));
  EXPECT_EQ(u.size(), 5u);
  EXPECT_TRUE(u.has_edge(2, 3));
  EXPECT_EQ(named::copies(named::complete(3), 2).edge_count(), 6u);
}
