#include <random>
#include <set>

#include <gtest/gtest.h>

#include "../oracles.hh"
#include "turan/digraph.hh"
#include "turan/errors.hh"
#include "turan/named_graphs.hh"

using namespace turan;

namespace {

using Parts = std::vector<std::vector<Vertex>>;

}  // namespace

TEST(ColourDigraph, Examples) {
  const std::vector<DirectedPair> back{{1, 0}};
  const auto k2 = colour_digraph(named::complete(2), back);
  EXPECT_TRUE(k2.is_blue(0, 1));
  EXPECT_TRUE(k2.is_red(1, 0));
  EXPECT_EQ(k2.parts, (Parts{{0}, {1}}));

  const auto all_blue = colour_digraph(named::path(3), {});
  EXPECT_EQ(all_blue.parts, (Parts{{0, 1, 2}}));
  EXPECT_EQ(all_blue.arcs.size(), 4u);

  const std::vector<DirectedPair> two{{1, 0}, {2, 1}};
  const auto path = colour_digraph(named::path(3), two);
  EXPECT_EQ(path.parts, (Parts{{0}, {1}, {2}}));
  EXPECT_TRUE(path.is_blue(0, 1));
  EXPECT_TRUE(path.is_blue(1, 2));
  EXPECT_EQ(path.condensation.size(), 2u);
  EXPECT_EQ(path.blue_reach[0], 0b111u);
  EXPECT_EQ(path.blue_reach[2], 0b100u);
}

TEST(ColourDigraph, Errors) {
  const std::vector<DirectedPair> missing{{0, 2}};
  EXPECT_THROW(colour_digraph(named::path(3), missing), ValidationError);
  const std::vector<DirectedPair> both{{0, 1}, {1, 0}};
  EXPECT_THROW(colour_digraph(named::path(3), both), ValidationError);
}

TEST(ColourDigraph, PartsAreMutualReachabilityClasses) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph h = oracle::random_graph(2 + rng() % 6, 0.5, rng);
    std::vector<DirectedPair> red;
    std::set<std::pair<Vertex, Vertex>> red_set;
    for (const auto& e : h.edges()) {
      const auto pick = rng() % 3;
      if (pick == 0) continue;
      red.push_back(pick == 1 ? DirectedPair{e.u, e.v} : DirectedPair{e.v, e.u});
      red_set.insert({red.back().from, red.back().to});
    }
    const auto d = colour_digraph(h, red);
    const auto reach = oracle::blue_reach(h, red_set);
    for (Vertex x = 0; x < h.size(); ++x) {
      EXPECT_EQ(d.blue_reach[x], reach[x]);
      for (Vertex y = 0; y < h.size(); ++y)
        EXPECT_EQ(d.part_of[x] == d.part_of[y], (reach[x] >> y & 1) && (reach[y] >> x & 1));
    }
    for (const auto& [a, b] : d.condensation) EXPECT_NE(a, b);
  }
}

TEST(SelectA, Examples) {
  // blue path 0 -> 1 -> 2
  const std::vector<DirectedPair> two{{1, 0}, {2, 1}};
  const auto path = select_A(colour_digraph(named::path(3), two));
  EXPECT_EQ(path.A, (std::vector<Vertex>{0}));
  EXPECT_EQ(path.W, (std::vector<Vertex>{0}));
  EXPECT_EQ(path.U, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(path.reach_sum, 3u);

  // no blue arcs at all: every vertex is its own source part
  const auto bare = select_A(colour_digraph(Graph(3), {}));
  EXPECT_EQ(bare.A, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(bare.W, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(bare.U.empty());

  // blue 2-cycle 0 <-> 1 plus isolated 2
  const auto cycle = select_A(colour_digraph(oracle::make(3, {{0, 1}}), {}));
  EXPECT_EQ(cycle.A, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(cycle.W, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(cycle.U.empty());
}

TEST(SelectA, ValidOnRandomColourings) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph h = oracle::random_graph(2 + rng() % 7, 0.45, rng);
    std::vector<DirectedPair> red;
    for (const auto& e : h.edges())
      if (rng() % 2) red.push_back(rng() % 2 ? DirectedPair{e.u, e.v} : DirectedPair{e.v, e.u});
    const auto d = colour_digraph(h, red);
    const auto s = select_A(d);
    EXPECT_EQ(check_selection(d, s), "");
    EXPECT_TRUE(reaches_everything(d, vertices_to_mask(s.A)));
  }
}

TEST(CheckSelection, FlagsDoctoredSelections) {
  const std::vector<DirectedPair> two{{1, 0}, {2, 1}};
  const auto d = colour_digraph(named::path(3), two);
  const auto good = select_A(d);

  auto unreachable = good;
  unreachable.A = {1};
  unreachable.reach_sum = reach_sum(d, 0b010);
  EXPECT_NE(check_selection(d, unreachable).find("(a)"), std::string::npos);

  auto too_big = good;
  too_big.A = {0, 1};
  too_big.reach_sum = reach_sum(d, 0b011);
  EXPECT_NE(check_selection(d, too_big).find("(b)"), std::string::npos);

  auto bad_sum = good;
  bad_sum.reach_sum = 2;
  EXPECT_FALSE(check_selection(d, bad_sum).empty());

  auto bad_w = good;
  bad_w.W = {0, 1};
  bad_w.U = {2};
  EXPECT_FALSE(check_selection(d, bad_w).empty());
}

TEST(SelectA, TakesLowestVertexOfEachSourcePart) {
  // 0 <-> 1 -> 2 and 3 -> 2: minimum sets need a vertex from {0,1} and 3
  const Graph h = oracle::make(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<DirectedPair> red{{2, 1}, {2, 3}};
  const auto d = colour_digraph(h, red);
  const auto s = select_A(d);
  EXPECT_EQ(s.A, (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(s.reach_sum, 5u);
}
