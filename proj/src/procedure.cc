#include "turan/procedure.hh"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "turan/errors.hh"

namespace turan {

BigInt ProcedureConfig::c(std::size_t i) const {
  return i == 0 ? BigInt(t) : constants.at(i - 1);
}

ProcedureConfig ProcedureConfig::proof_scale(const Graph& h, std::size_t t) {
  ProcedureConfig config;
  config.mode = ConstantsMode::kProofScale;
  config.t = t;
  BigInt previous = t;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    BigInt next = BigInt(t) * (BigInt(h.size()) *
                                   big_pow(previous, static_cast<unsigned>(h.size())) +
                               1);
    if (boost::multiprecision::msb(next) + 1 > kMaxConstantBits)
      throw UnsupportedSize("proof-scale constant c_" + std::to_string(i + 1) +
                            " exceeds " + std::to_string(kMaxConstantBits) +
                            " bits");
    config.constants.push_back(next);
    previous = std::move(next);
  }
  return config;
}

ProcedureConfig ProcedureConfig::desk_scale(std::vector<BigInt> constants,
                                            std::size_t t) {
  ProcedureConfig config;
  config.mode = ConstantsMode::kDeskScale;
  config.t = t;
  config.constants = std::move(constants);
  return config;
}

void validate_config(const ProcedureConfig& config, const Graph& h) {
  if (config.t < 1) throw ValidationError("config: t must be positive");
  if (config.constants.size() != h.edge_count())
    throw ValidationError("config: expected " + std::to_string(h.edge_count()) +
                          " constants, got " +
                          std::to_string(config.constants.size()));
  for (std::size_t i = 1; i <= config.constants.size(); ++i) {
    if (config.c(i) <= 0)
      throw ValidationError("config: constants must be positive");
    if (i > 1 && config.c(i) <= config.c(i - 1))
      throw ValidationError("config: constants must be strictly increasing");
    if (config.mode == ConstantsMode::kProofScale) {
      const BigInt need =
          BigInt(config.t) *
          (BigInt(h.size()) *
               big_pow(config.c(i - 1), static_cast<unsigned>(h.size())) +
           1);
      if (config.c(i) < need)
        throw ValidationError("config: c_" + std::to_string(i) +
                              " violates c_i >= t(h c_{i-1}^h + 1)");
    }
  }
}

namespace {

std::vector<Embedding> all_embeddings(const Graph& g, const Graph& h) {
  std::vector<Embedding> out;
  for_each_embedding(g, h, nullptr, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::size_t rainbow_embeddings(const std::vector<Embedding>& embeddings,
                               const std::vector<Vertex>& labels) {
  std::size_t count = 0;
  for (const auto& e : embeddings) {
    bool ok = true;
    for (std::size_t u = 0; u < e.image.size() && ok; ++u)
      ok = labels[e.image[u]] == u;
    if (ok) ++count;
  }
  return count;
}

// Conditional expectations. With k of an embedding's h image vertices
// labelled consistently and the rest uniform, it survives with probability
// h^k / h^h; scaled weights h^k keep everything integral.
std::vector<Vertex> derandomized_labels(std::size_t n, std::size_t h,
                                        const std::vector<Embedding>& embs) {
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> touching(n);
  for (std::size_t f = 0; f < embs.size(); ++f)
    for (std::size_t u = 0; u < h; ++u)
      touching[embs[f].image[u]].push_back({f, static_cast<Vertex>(u)});

  std::vector<std::uint64_t> weight(embs.size(), 1);
  std::vector<bool> alive(embs.size(), true);
  std::vector<Vertex> labels(n, 0);
  std::vector<BigInt> score(h);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(score.begin(), score.end(), BigInt(0));
    for (const auto& [f, u] : touching[x])
      if (alive[f]) score[u] += weight[f];
    const auto best = static_cast<Vertex>(
        std::max_element(score.begin(), score.end()) - score.begin());
    labels[x] = best;
    for (const auto& [f, u] : touching[x]) {
      if (!alive[f]) continue;
      if (u == best)
        weight[f] *= h;
      else
        alive[f] = false;
    }
  }
  return labels;
}

}  // namespace

RainbowResult rainbow_partition(const Graph& g, const Graph& h,
                                const RainbowStrategy& strategy) {
  require_pattern(h, "H");
  if (g.size() == 0) throw ValidationError("rainbow partition: empty host");
  const std::size_t hs = h.size();
  const auto embeddings = all_embeddings(g, h);

  std::vector<Vertex> labels;
  std::size_t achieved = 0;
  if (strategy.kind == RainbowStrategy::Kind::kDerandomized) {
    labels = derandomized_labels(g.size(), hs, embeddings);
    achieved = rainbow_embeddings(embeddings, labels);
  } else {
    std::mt19937_64 rng(strategy.seed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(hs - 1));
    for (std::size_t trial = 0; trial < std::max<std::size_t>(1, strategy.trials);
         ++trial) {
      std::vector<Vertex> candidate(g.size());
      for (auto& label : candidate) label = pick(rng);
      const std::size_t count = rainbow_embeddings(embeddings, candidate);
      if (labels.empty() || count > achieved) {
        labels = std::move(candidate);
        achieved = count;
      }
    }
  }

  RainbowResult out;
  out.partition = LabelPartition::from_labels(std::move(labels), hs);
  out.family = list_copies(g, h, out.partition);
  if (out.family.size() != achieved)
    throw InternalError("rainbow copy count disagrees with embedding count");
  out.total_copies = count_copies(g, h);
  out.guarantee_met = BigInt(out.family.size()) *
                          big_pow(BigInt(hs), static_cast<unsigned>(hs)) >=
                      out.total_copies;
  if (strategy.kind == RainbowStrategy::Kind::kDerandomized &&
      !out.guarantee_met)
    throw InternalError("derandomized labelling fell below m / h^h");
  return out;
}

PopularOrdering popular_ordering(const CopyFamily& family,
                                 const VertexOrdering& ordering) {
  if (ordering.position.size() != family.host->size())
    throw ValidationError("ordering does not cover the host graph");
  const std::size_t h = family.pattern->size();

  std::map<std::vector<Vertex>, std::vector<std::size_t>> by_order;
  std::vector<Vertex> inherited(h);
  for (std::size_t f = 0; f < family.size(); ++f) {
    const auto& image = family.embeddings[f].image;
    for (Vertex u = 0; u < h; ++u) inherited[u] = u;
    std::sort(inherited.begin(), inherited.end(), [&](Vertex a, Vertex b) {
      return ordering.position[image[a]] < ordering.position[image[b]];
    });
    by_order[inherited].push_back(f);
  }

  PopularOrdering out;
  out.family = family.empty_like();
  const std::vector<std::size_t>* winner = nullptr;
  // std::map iterates keys ascending, so strict > keeps the smallest on ties.
  for (const auto& [order, members] : by_order)
    if (winner == nullptr || members.size() > winner->size()) {
      winner = &members;
      out.order = order;
    }
  if (winner != nullptr)
    for (std::size_t f : *winner)
      out.family.embeddings.push_back(family.embeddings[f]);
  out.rank.assign(h, 0);
  for (std::size_t k = 0; k < out.order.size(); ++k) out.rank[out.order[k]] = k;
  return out;
}

namespace {

CopyFamily select(const CopyFamily& family, const std::vector<bool>& keep) {
  CopyFamily out = family.empty_like();
  for (std::size_t f = 0; f < family.size(); ++f)
    if (keep[f]) out.embeddings.push_back(family.embeddings[f]);
  return out;
}

}  // namespace

ProcedureOutcome refine_families(const CopyFamily& family,
                                 std::span<const Vertex> order_h,
                                 const ProcedureConfig& config) {
  const Graph& h = *family.pattern;
  validate_config(config, h);
  if (family.empty()) throw ValidationError("refine_families: empty family");
  if (!family.partition)
    throw ValidationError("refine_families: family is not rainbow");
  std::vector<std::size_t> rank(h.size(), h.size());
  for (std::size_t k = 0; k < order_h.size(); ++k)
    if (order_h[k] < h.size()) rank[order_h[k]] = k;
  if (order_h.size() != h.size() ||
      std::count(rank.begin(), rank.end(), h.size()) != 0)
    throw ValidationError("refine_families: order is not a permutation of V(H)");

  const LabelPartition& classes = *family.partition;
  const std::size_t e_h = h.edge_count();
  const std::size_t t = config.t;

  std::vector<DirectedPair> red;
  for (const auto& [a, b] : h.edges())
    red.push_back(rank[a] > rank[b] ? DirectedPair{a, b} : DirectedPair{b, a});
  std::sort(red.begin(), red.end());

  ProcedureOutcome out;
  std::size_t i = 1;
  std::size_t j = 1;
  CopyFamily current = family;
  std::vector<CopyFamily> stage{current};

  while (i <= e_h && j < t) {
    const Graph joined = union_graph(current);
    const BigInt threshold = config.c(i);

    std::vector<Row> low(red.size());
    TraceStep step;
    step.i = i;
    step.j = j;
    step.family_size = current.size();
    step.red_count = red.size();
    for (std::size_t k = 0; k < red.size(); ++k) {
      const auto [u, w] = red[k];
      low[k] = Row(joined.size());
      const Row& from = classes.members(u);
      for (auto x = from.find_first(); x != Row::npos; x = from.find_next(x))
        if (BigInt((joined.row(static_cast<Vertex>(x)) & classes.members(w))
                       .count()) <= threshold)
          low[k].set(x);
      step.b_sizes.push_back({red[k], low[k].count()});
    }

    std::vector<bool> avoids(current.size(), true);
    std::size_t avoiding = 0;
    for (std::size_t f = 0; f < current.size(); ++f) {
      const auto& image = current.embeddings[f].image;
      for (std::size_t k = 0; k < red.size() && avoids[f]; ++k)
        if (low[k].test(image[red[k].from])) avoids[f] = false;
      if (avoids[f]) ++avoiding;
    }

    if (2 * avoiding >= current.size()) {
      step.branch = TraceStep::Branch::kFilter;
      step.kept = avoiding;
      step.retention_ok = 2 * step.kept >= step.family_size;
      current = select(current, avoids);
      stage.push_back(current);
      ++j;
    } else {
      step.branch = TraceStep::Branch::kRestrict;
      std::optional<std::size_t> chosen;
      std::vector<bool> incident;
      for (std::size_t k = 0; k < red.size() && !chosen; ++k) {
        incident.assign(current.size(), false);
        std::size_t hits = 0;
        for (std::size_t f = 0; f < current.size(); ++f)
          if (low[k].test(current.embeddings[f].image[red[k].from])) {
            incident[f] = true;
            ++hits;
          }
        if (2 * red.size() * hits >= current.size()) {
          chosen = k;
          step.kept = hits;
        }
      }
      if (!chosen)
        throw InternalError("no pair holds 1/(2|E_i|) of the copies");
      step.removed = red[*chosen];
      step.retention_ok = 2 * red.size() * step.kept >= step.family_size;
      current = select(current, incident);
      red.erase(red.begin() + static_cast<std::ptrdiff_t>(*chosen));
      stage.assign(1, current);
      ++i;
      j = 1;
    }
    out.trace.push_back(std::move(step));
  }

  out.l = i;
  out.remaining_red = red;
  if (i == e_h + 1) {
    out.kind = ProcedureOutcome::Kind::kSparse;
    out.families = {current};
    SparseBound bound;
    bound.components = connected_components(h).size();
    bound.host_size = family.host->size();
    bound.counted = current.size();
    bound.bound =
        big_pow(config.c(out.l - 1), static_cast<unsigned>(h.size() * h.size())) *
        big_pow(BigInt(bound.host_size), static_cast<unsigned>(bound.components));
    bound.holds = bound.counted <= bound.bound;
    out.sparse_bound = std::move(bound);
  } else {
    out.kind = ProcedureOutcome::Kind::kStructured;
    out.families = std::move(stage);
  }
  return out;
}

}  // namespace turan
