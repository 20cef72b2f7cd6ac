#include <algorithm>
#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "../oracles.hh"
#include "turan/errors.hh"
#include "turan/named_graphs.hh"
#include "turan/procedure.hh"

using namespace turan;

namespace {

// Best rainbow count over every labelling of the host.
std::size_t best_rainbow(const Graph& g, const Graph& h) {
  const std::size_t k = h.size();
  std::size_t best = 0;
  std::vector<Vertex> labels(g.size());
  for (std::uint64_t code = 0; code < oracle::ipow(k, g.size()); ++code) {
    std::uint64_t rest = code;
    for (auto& l : labels) {
      l = static_cast<Vertex>(rest % k);
      rest /= k;
    }
    std::size_t count = 0;
    oracle::for_each_injection(k, g.size(), [&](const auto& map) {
      if (!oracle::preserves_edges(g, h, map)) return;
      for (Vertex u = 0; u < k; ++u)
        if (labels[map[u]] != u) return;
      ++count;
    });
    best = std::max(best, count);
  }
  return best;
}

CopyFamily family_of(const Graph& g, const Graph& h, std::vector<Vertex> labels,
                     std::vector<std::vector<Vertex>> images) {
  CopyFamily f;
  f.host = std::make_shared<const Graph>(g);
  f.pattern = std::make_shared<const Graph>(h);
  f.partition = LabelPartition::from_labels(std::move(labels), h.size());
  for (auto& image : images) f.embeddings.push_back({std::move(image)});
  return f;
}

VertexOrdering identity_ordering(std::size_t n) {
  VertexOrdering o;
  for (Vertex v = 0; v < n; ++v) {
    o.order.push_back(v);
    o.position.push_back(v);
  }
  return o;
}

ProcedureOutcome run(const Graph& g, const Graph& h, const ProcedureConfig& config) {
  const auto rainbow = rainbow_partition(g, h);
  const auto popular =
      popular_ordering(rainbow.family, degeneracy_ordering(union_graph(rainbow.family)));
  return refine_families(popular.family, popular.order, config);
}

void expect_well_formed(const ProcedureOutcome& out, const Graph& h, std::size_t t) {
  const std::size_t e_h = h.edge_count();
  EXPECT_LE(out.trace.size(), (e_h + 1) * t);
  const bool sparse = out.kind == ProcedureOutcome::Kind::kSparse;
  EXPECT_EQ(sparse, out.remaining_red.empty());
  EXPECT_EQ(sparse, out.l == e_h + 1);
  for (const auto& step : out.trace) {
    EXPECT_TRUE(step.retention_ok);
    if (step.branch == TraceStep::Branch::kFilter)
      EXPECT_GE(2 * step.kept, step.family_size);
    else
      EXPECT_GE(2 * step.red_count * step.kept, step.family_size);
  }
  if (!sparse) {
    ASSERT_EQ(out.families.size(), t);
    for (std::size_t k = 1; k < t; ++k)
      for (const auto& e : out.families[k].embeddings)
        EXPECT_TRUE(std::binary_search(out.families[k - 1].embeddings.begin(),
                                       out.families[k - 1].embeddings.end(), e));
  }
}

}  // namespace

TEST(Config, ProofScaleRecursion) {
  const auto config = ProcedureConfig::proof_scale(named::complete(3), 4);
  ASSERT_EQ(config.constants.size(), 3u);
  EXPECT_EQ(config.c(0), 4);
  EXPECT_EQ(config.c(1), 772);
  EXPECT_EQ(config.c(2), BigInt(4) * (3 * big_pow(BigInt(772), 3) + 1));
  EXPECT_NO_THROW(validate_config(config, named::complete(3)));
  EXPECT_THROW(ProcedureConfig::proof_scale(named::complete(6), 5), UnsupportedSize);
}

TEST(Config, Validation) {
  const Graph h = named::path(3);
  EXPECT_NO_THROW(validate_config(ProcedureConfig::desk_scale({2, 3}, 3), h));
  EXPECT_THROW(validate_config(ProcedureConfig::desk_scale({2}, 3), h), ValidationError);
  EXPECT_THROW(validate_config(ProcedureConfig::desk_scale({3, 3}, 3), h), ValidationError);
  EXPECT_THROW(validate_config(ProcedureConfig::desk_scale({0, 3}, 3), h), ValidationError);
  auto bent = ProcedureConfig::proof_scale(h, 3);
  bent.constants[1] -= 1;
  EXPECT_THROW(validate_config(bent, h), ValidationError);
}

TEST(Rainbow, Examples) {
  const auto one = rainbow_partition(named::complete(3), named::complete(3));
  EXPECT_GE(one.family.size(), 1u);
  EXPECT_TRUE(one.guarantee_met);

  const Graph two_triangles = named::copies(named::complete(3), 2);
  EXPECT_GE(rainbow_partition(two_triangles, named::complete(3)).family.size(), 1u);
  EXPECT_EQ(best_rainbow(two_triangles, named::complete(3)), 2u);

  const auto star = rainbow_partition(named::star(4), named::path(3));
  EXPECT_GE(star.family.size(), 1u);
  EXPECT_EQ(star.total_copies, 6);
  EXPECT_EQ(best_rainbow(named::star(4), named::path(3)), 4u);
}

TEST(Rainbow, FamilyIsExactlyTheRainbowCopies) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(5 + rng() % 5, 0.4, rng);
    for (const Graph& h : {named::path(3), named::complete(3), named::star(3)}) {
      const auto result = rainbow_partition(g, h);
      const auto& labels = result.partition.labels();
      for (const auto& e : result.family.embeddings) {
        EXPECT_TRUE(is_valid_embedding(g, h, e));
        for (Vertex u = 0; u < h.size(); ++u) EXPECT_EQ(labels[e.image[u]], u);
      }
      EXPECT_GE(BigInt(result.family.size()) * oracle::ipow(h.size(), h.size()),
                result.total_copies);
    }
  }
}

TEST(Rainbow, RandomStrategyIsSeeded) {
  const Graph g = named::copies(named::complete(3), 4);
  RainbowStrategy strategy{RainbowStrategy::Kind::kRandom, 99, 20};
  const auto a = rainbow_partition(g, named::complete(3), strategy);
  const auto b = rainbow_partition(g, named::complete(3), strategy);
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_EQ(a.guarantee_met,
            BigInt(a.family.size()) * 27 >= a.total_copies);
}

TEST(PopularOrdering, Examples) {
  const Graph h = named::complete(2);
  // disjoint edges 0-1, 2-3 with identical orders
  const Graph g = named::copies(h, 2);
  const auto same = family_of(g, h, {0, 1, 0, 1}, {{0, 1}, {2, 3}});
  const auto kept = popular_ordering(same, identity_ordering(4));
  EXPECT_EQ(kept.family.embeddings, same.embeddings);
  EXPECT_EQ(kept.order, (std::vector<Vertex>{0, 1}));

  // three edges, two of them with pattern vertex 1 first
  const Graph three = named::copies(h, 3);
  const auto mixed = family_of(three, h, {1, 0, 1, 0, 0, 1}, {{1, 0}, {3, 2}, {4, 5}});
  const auto majority = popular_ordering(mixed, identity_ordering(6));
  EXPECT_EQ(majority.family.size(), 2u);
  EXPECT_EQ(majority.order, (std::vector<Vertex>{1, 0}));
  EXPECT_EQ(majority.rank, (std::vector<std::size_t>{1, 0}));

  const auto single = family_of(g, h, {1, 0, 0, 0}, {{1, 0}});
  const auto only = popular_ordering(single, identity_ordering(4));
  EXPECT_EQ(only.family.size(), 1u);
  EXPECT_EQ(only.order, (std::vector<Vertex>{1, 0}));
}

TEST(Refine, DisjointBlowUpIsSparse) {
  const Graph h = named::path(3);
  const auto out = run(named::copies(h, 5), h, ProcedureConfig::proof_scale(h, 3));
  EXPECT_EQ(out.kind, ProcedureOutcome::Kind::kSparse);
  EXPECT_EQ(out.l, h.edge_count() + 1);
  ASSERT_TRUE(out.sparse_bound);
  EXPECT_TRUE(out.sparse_bound->holds);
  EXPECT_EQ(out.sparse_bound->components, 1u);
  expect_well_formed(out, h, 3);
}

TEST(Refine, SmallStarGolden) {
  const Graph h = named::path(3);
  const auto out = run(named::star(4), h, ProcedureConfig::desk_scale({2, 3}, 3));
  expect_well_formed(out, h, 3);
  EXPECT_EQ(out.kind, ProcedureOutcome::Kind::kSparse);
  ASSERT_EQ(out.trace.size(), 2u);
  EXPECT_EQ(out.trace[0].branch, TraceStep::Branch::kRestrict);
  EXPECT_EQ(out.trace[0].family_size, 2u);
  EXPECT_EQ(out.trace[0].b_sizes.size(), 2u);
  EXPECT_EQ(out.trace[0].removed, (DirectedPair{1, 0}));
  EXPECT_EQ(out.trace[1].removed, (DirectedPair{2, 1}));
  EXPECT_EQ(out.sparse_bound->bound, 98415);
}

TEST(Refine, LargeStarIsStructured) {
  const Graph h = named::path(3);
  const auto out = run(named::star(20), h, ProcedureConfig::desk_scale({2, 3}, 4));
  expect_well_formed(out, h, 4);
  EXPECT_EQ(out.kind, ProcedureOutcome::Kind::kStructured);
  EXPECT_FALSE(out.remaining_red.empty());
}

TEST(Refine, SingleEdgePatternStopsAfterOneRestrict) {
  const Graph h = named::complete(2);
  const auto out = run(named::copies(h, 3), h, ProcedureConfig::desk_scale({5}, 3));
  EXPECT_EQ(out.kind, ProcedureOutcome::Kind::kSparse);
  EXPECT_EQ(out.l, 2u);
  ASSERT_EQ(out.trace.size(), 1u);
  EXPECT_EQ(out.trace[0].branch, TraceStep::Branch::kRestrict);
}

TEST(Refine, RandomInstancesAreWellFormed) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph h = trial % 2 ? named::path(3) : named::complete(3);
    const Graph g = oracle::random_graph(8 + rng() % 20, 0.35, rng);
    if (count_copies(g, h) == 0) continue;
    const std::size_t t = 3 + rng() % 3;
    std::vector<BigInt> constants;
    BigInt c = 0;
    for (std::size_t i = 1; i <= h.edge_count(); ++i) {
      c += 1 + rng() % 2;
      constants.push_back(c);
    }
    expect_well_formed(run(g, h, ProcedureConfig::desk_scale(constants, t)), h, t);
  }
}

TEST(Refine, Errors) {
  const Graph h = named::complete(2);
  const auto config = ProcedureConfig::desk_scale({2}, 3);
  const auto empty = family_of(h, h, {0, 1}, {});
  const std::vector<Vertex> order{0, 1};
  EXPECT_THROW(refine_families(empty, order, config), ValidationError);
  auto plain = family_of(h, h, {0, 1}, {{0, 1}});
  plain.partition.reset();
  EXPECT_THROW(refine_families(plain, order, config), ValidationError);
  const auto ok = family_of(h, h, {0, 1}, {{0, 1}});
  const std::vector<Vertex> bad_order{0, 0};
  EXPECT_THROW(refine_families(ok, bad_order, config), ValidationError);
}
