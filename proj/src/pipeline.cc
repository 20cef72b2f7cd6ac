#include "turan/pipeline.hh"

#include <utility>

#include "turan/errors.hh"

namespace turan {

namespace {

template <typename F>
auto in_stage(PipelineReport& report, const char* name, F&& body) {
  report.stage = name;
  const std::string prefix = std::string("stage ") + name + ": ";
  try {
    return body();
  } catch (const UnsupportedSize& e) {
    throw UnsupportedSize(prefix + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(prefix + e.what());
  } catch (const InternalError& e) {
    throw InternalError(prefix + e.what());
  }
}

BigInt factorial(std::size_t k) {
  BigInt out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= i;
  return out;
}

}  // namespace

PipelineReport run_pipeline(const Graph& g, const Graph& h, const Graph& t,
                            const ProcedureConfig& config) {
  PipelineReport report;
  in_stage(report, "validate", [&] {
    require_pattern(h, "H");
    require_tree_pattern(t);
    if (config.t != t.size())
      throw ValidationError("config built for t=" + std::to_string(config.t) +
                            " but |T|=" + std::to_string(t.size()));
    validate_config(config, h);
  });
  report.h = h.size();
  report.t = t.size();
  report.host_size = g.size();
  const bool proof = config.mode == ConstantsMode::kProofScale;

  // Unconditional guarantees raise in proof-scale mode; the others rely on
  // G being T-free with many copies and are only flagged.
  auto check = [&](std::string name, BigInt lhs, BigInt rhs,
                   ThresholdCheck::Relation relation, bool unconditional) {
    ThresholdCheck c{std::move(name), std::move(lhs), std::move(rhs), relation,
                     false};
    c.holds = relation == ThresholdCheck::Relation::kAtLeast ? c.lhs >= c.rhs
                                                             : c.lhs <= c.rhs;
    if (!c.holds) {
      if (proof && unconditional)
        throw InternalError("threshold failed: " + c.name);
      report.flags.push_back("threshold failed: " + c.name);
    }
    report.checks.push_back(std::move(c));
  };

  report.total_copies =
      in_stage(report, "count", [&] { return count_copies(g, h); });
  if (report.total_copies == 0) {
    report.flags.push_back("no copies of H; bound holds vacuously");
    return report;
  }

  const auto rainbow =
      in_stage(report, "rainbow_partition", [&] { return rainbow_partition(g, h); });
  report.rainbow_copies = rainbow.family.size();
  const BigInt h_pow_h = big_pow(BigInt(h.size()), static_cast<unsigned>(h.size()));
  check("|H_0| * h^h >= m", BigInt(report.rainbow_copies) * h_pow_h,
        report.total_copies, ThresholdCheck::Relation::kAtLeast, true);

  const auto ordering = in_stage(report, "degeneracy_ordering", [&] {
    return degeneracy_ordering(union_graph(rainbow.family));
  });
  report.degeneracy = ordering.bound;
  if (t.size() >= 2 && report.degeneracy + 2 > t.size())
    report.flags.push_back("union graph degeneracy exceeds t-2");

  const auto popular = in_stage(report, "popular_ordering", [&] {
    return popular_ordering(rainbow.family, ordering);
  });
  report.order_h = popular.order;
  report.ordered_copies = popular.family.size();
  check("|H_1| * h! >= |H_0|", BigInt(report.ordered_copies) * factorial(h.size()),
        BigInt(report.rainbow_copies), ThresholdCheck::Relation::kAtLeast, true);

  report.outcome = in_stage(report, "refine_families", [&] {
    return refine_families(popular.family, popular.order, config);
  });
  const auto& outcome = *report.outcome;
  for (const auto& step : outcome.trace)
    if (!step.retention_ok)
      throw InternalError("refine_families: retention bound violated at i=" +
                          std::to_string(step.i));

  const std::size_t e_h = h.edge_count();
  const BigInt cumulative = big_pow(BigInt(2 * e_h), static_cast<unsigned>(t.size() * e_h));
  check("|F_1| * (2e(H))^(t e(H)) >= |H_1|",
        BigInt(outcome.families.front().size()) * cumulative,
        BigInt(report.ordered_copies), ThresholdCheck::Relation::kAtLeast, true);

  if (outcome.kind == ProcedureOutcome::Kind::kSparse) {
    report.stage = "sparse_bound";
    const auto& bound = *outcome.sparse_bound;
    report.components = bound.components;
    check("|F| <= c_{l-1}^(h^2) n^a", bound.counted, bound.bound,
          ThresholdCheck::Relation::kAtMost, false);
    report.profile = in_stage(report, "exponent_r", [&] { return exponent_r(h, t); });
    if (report.profile->status == ExponentStatus::kZero) {
      report.flags.push_back("H contains T, so the input is not T-free");
    } else {
      check("r >= a", BigInt(report.profile->r), BigInt(report.components),
            ThresholdCheck::Relation::kAtLeast, true);
    }
    return report;
  }

  report.digraph = in_stage(report, "colour_digraph", [&] {
    return colour_digraph(h, outcome.remaining_red);
  });
  report.selection = in_stage(report, "select_A", [&] { return select_A(*report.digraph); });
  const auto blowup = in_stage(report, "blow_up", [&] {
    return blow_up(h, report.selection->U, t.size());
  });
  report.blowup_size = blowup.graph.size();
  const auto gamma_copy = in_stage(report, "blowup_contains_T", [&] {
    return contains_copy(blowup.graph, t);
  });
  report.blowup_contains_t = gamma_copy.has_value();
  report.profile = in_stage(report, "exponent_r", [&] { return exponent_r(h, t); });
  if (report.profile->status == ExponentStatus::kFinite)
    check("|A| > r", BigInt(report.selection->A.size()),
          BigInt(report.profile->r + 1), ThresholdCheck::Relation::kAtLeast,
          false);

  if (!gamma_copy) {
    report.flags.push_back("blow-up is T-free, so no copy of T to transfer");
    return report;
  }
  auto result = in_stage(report, "embed_tree", [&] {
    return embed_tree(t, *gamma_copy, blowup, outcome.families, *report.digraph);
  });
  if (auto* cert = std::get_if<EmbeddingCertificate>(&result)) {
    if (!is_valid_embedding(g, t, cert->tree_map))
      throw InternalError("stage embed_tree: certificate is not a copy of T in G");
    report.t_copy = std::move(*cert);
    report.flags.push_back("input not T-free");
  } else {
    report.embedding_failure = std::get<EmbeddingFailure>(std::move(result));
    report.flags.push_back("tree embedding failed at step " +
                           std::to_string(report.embedding_failure->step));
  }
  return report;
}

}  // namespace turan
