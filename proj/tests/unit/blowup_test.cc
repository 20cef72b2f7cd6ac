#include <set>

#include <gtest/gtest.h>

#include "../oracles.hh"
#include "turan/blowup.hh"
#include "turan/canonical.hh"
#include "turan/errors.hh"
#include "turan/named_graphs.hh"
#include "turan/subgraph.hh"

using namespace turan;

namespace {

std::vector<Graph> trees_up_to_five() {
  return {named::complete(2), named::path(3), named::path(4), named::star(3),
          named::path(5),     named::star(4), oracle::make(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}})};
}

// One labelled graph per isomorphism class, no isolated vertices.
std::vector<Graph> patterns_up_to(std::size_t h_max) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  for (std::size_t n = 2; n <= h_max; ++n)
    oracle::for_each_labelled(n, [&](const Graph& g) {
      if (!g.has_isolated_vertex() && seen.insert(canonical_form(g)).second) out.push_back(g);
    });
  return out;
}

}  // namespace

TEST(BlowUp, Examples) {
  const Graph h = named::path(4);
  const auto whole = blow_up(h, VertexMask{0b1111}, 3);
  EXPECT_EQ(whole.graph, h);
  EXPECT_EQ(whole.phi, (std::vector<Vertex>{0, 1, 2, 3}));

  const auto disjoint = blow_up(h, VertexMask{0}, 3);
  EXPECT_EQ(disjoint.graph, named::copies(h, 3));

  const std::vector<Vertex> centre{1};
  const auto star = blow_up(named::path(3), centre, 3);
  EXPECT_EQ(canonical_form(star.graph), canonical_form(named::star(6)));
  EXPECT_EQ(star.vertex_of(1, 2), 0u);
  EXPECT_EQ(star.phi[star.vertex_of(2, 3)], 2u);
  EXPECT_EQ(star.copy_index[star.vertex_of(0, 2)], 2u);
}

TEST(BlowUp, Errors) {
  EXPECT_THROW(blow_up(named::path(3), VertexMask{0}, 0), ValidationError);
  EXPECT_THROW(blow_up(named::path(3), VertexMask{0b1000}, 2), ValidationError);
  EXPECT_THROW(blow_up(Graph(2), VertexMask{0}, 2), ValidationError);
}

TEST(BlowUp, MatchesReferenceConstructionAndArithmetic) {
  for (const Graph& h : patterns_up_to(4))
    for (VertexMask u = 0; u < (1u << h.size()); ++u)
      for (std::size_t t = 1; t <= 4; ++t) {
        const auto b = blow_up(h, u, t);
        EXPECT_EQ(b.graph, oracle::blow_up(h, u, t));
        const std::size_t k = std::popcount(u);
        const Graph inside = h.induced(mask_to_vertices(u));
        EXPECT_EQ(b.graph.size(), k + t * (h.size() - k));
        EXPECT_EQ(b.graph.edge_count(),
                  inside.edge_count() + t * (h.edge_count() - inside.edge_count()));
        for (Vertex x = 0; x < b.graph.size(); ++x)
          for (Vertex y : b.graph.neighbours(x)) EXPECT_TRUE(h.has_edge(b.phi[x], b.phi[y]));
        EXPECT_GE(count_copies(b.graph, h),
                  BigInt(oracle::ipow(t, oracle::components(h, u))));
      }
}

TEST(BlowUp, ContainmentIsMonotoneInT) {
  for (const Graph& h : patterns_up_to(4))
    for (const Graph& tree : trees_up_to_five())
      for (VertexMask u = 0; u < (1u << h.size()); ++u) {
        bool seen = false;
        for (std::size_t t = 1; t <= 5; ++t) {
          const bool has = contains_copy(blow_up(h, u, t).graph, tree).has_value();
          EXPECT_TRUE(!seen || has);
          seen = seen || has;
        }
      }
}

TEST(Exponent, Examples) {
  const auto k2 = exponent_r(named::complete(2), named::path(3));
  EXPECT_EQ(k2.status, ExponentStatus::kFinite);
  EXPECT_EQ(k2.r, 1u);
  EXPECT_TRUE(k2.witness_U.empty());

  const auto p3 = exponent_r(named::path(3), named::path(4));
  EXPECT_EQ(p3.r, 2u);
  EXPECT_EQ(p3.witness_U, (std::vector<Vertex>{1}));
  EXPECT_EQ(p3.t_used, 4u);

  EXPECT_EQ(exponent_r(named::path(4), named::path(3)).status, ExponentStatus::kZero);

  const auto k3 = exponent_r(named::complete(3), named::star(3));
  EXPECT_EQ(k3.r, 1u);
  EXPECT_TRUE(k3.witness_U.empty());
}

TEST(Exponent, RejectsNonTrees) {
  EXPECT_THROW(exponent_r(named::path(3), named::complete(3)), ValidationError);
  EXPECT_THROW(exponent_r(named::path(3), named::copies(named::complete(2), 2)),
               ValidationError);
}

TEST(Exponent, AgreesWithExhaustiveOracle) {
  for (const Graph& h : patterns_up_to(5))
    for (const Graph& tree : trees_up_to_five()) {
      const auto profile = exponent_r(h, tree);
      const auto truth = oracle::exponent(h, tree);
      ASSERT_EQ(profile.status == ExponentStatus::kZero, truth.zero);
      EXPECT_TRUE(verify_profile(h, tree, profile).ok);
      if (truth.zero) continue;
      EXPECT_EQ(profile.r, truth.r);
      const VertexMask mask = vertices_to_mask(profile.witness_U);
      EXPECT_NE(std::find(truth.witnesses.begin(), truth.witnesses.end(), mask),
                truth.witnesses.end());
      // r is at least the number of components of H and at most h
      EXPECT_GE(profile.r, oracle::components(h, 0));
      EXPECT_LE(profile.r, h.size());
      for (VertexMask w : truth.witnesses)
        EXPECT_LE(profile.witness_U.size(), static_cast<std::size_t>(std::popcount(w)));
    }
}

TEST(VerifyProfile, Examples) {
  const Graph p3 = named::path(3);
  auto profile = exponent_r(p3, named::path(4));
  EXPECT_TRUE(verify_profile(p3, named::path(4), profile).ok);
  auto tampered = profile;
  tampered.r = 3;
  EXPECT_FALSE(verify_profile(p3, named::path(4), tampered).ok);

  ExponentProfile leaf{ExponentStatus::kFinite, 1, {0}, 4};
  const auto check = verify_profile(p3, named::star(3), leaf);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.reason.empty());

  ExponentProfile zero{ExponentStatus::kZero, 0, {}, 4};
  EXPECT_FALSE(verify_profile(p3, named::star(3), zero).ok);
  auto wrong_t = exponent_r(p3, named::star(3));
  wrong_t.t_used = 5;
  EXPECT_FALSE(verify_profile(p3, named::star(3), wrong_t).ok);
}
