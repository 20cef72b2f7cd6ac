#include "turan/subgraph.hh"

#include <algorithm>
#include <bit>
#include <string>

#include "turan/errors.hh"

namespace turan {

bool is_valid_embedding(const Graph& host, const Graph& pattern,
                        const Embedding& e) {
  if (e.image.size() != pattern.size()) return false;
  std::vector<bool> seen(host.size(), false);
  for (Vertex x : e.image) {
    if (x >= host.size() || seen[x]) return false;
    seen[x] = true;
  }
  for (const auto& [u, v] : pattern.edges())
    if (!host.has_edge(e.image[u], e.image[v])) return false;
  return true;
}

LabelPartition LabelPartition::from_labels(std::vector<Vertex> labels,
                                           std::size_t classes) {
  LabelPartition p;
  p.members_.assign(classes, Row(labels.size()));
  for (std::size_t x = 0; x < labels.size(); ++x) {
    if (labels[x] >= classes)
      throw ValidationError("host vertex " + std::to_string(x) +
                            " has label outside the pattern");
    p.members_[labels[x]].set(x);
  }
  p.labels_ = std::move(labels);
  return p;
}

LabelPartition LabelPartition::from_classes(
    std::span<const std::vector<Vertex>> classes, std::size_t host_size) {
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> labels(host_size, kUnset);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Vertex x : classes[c]) {
      if (x >= host_size)
        throw ValidationError("partition class mentions vertex " +
                              std::to_string(x) + " outside the host");
      if (labels[x] != kUnset)
        throw ValidationError("partition classes overlap at vertex " +
                              std::to_string(x));
      labels[x] = static_cast<Vertex>(c);
    }
  for (std::size_t x = 0; x < host_size; ++x)
    if (labels[x] == kUnset)
      throw ValidationError("partition does not cover vertex " +
                            std::to_string(x));
  return from_labels(std::move(labels), classes.size());
}

std::vector<Vertex> LabelPartition::class_vertices(Vertex cls) const {
  std::vector<Vertex> out;
  const Row& row = members_[cls];
  for (auto x = row.find_first(); x != Row::npos; x = row.find_next(x))
    out.push_back(static_cast<Vertex>(x));
  return out;
}

CopyFamily CopyFamily::empty_like() const {
  CopyFamily out;
  out.host = host;
  out.pattern = pattern;
  out.partition = partition;
  return out;
}

Graph union_graph(const CopyFamily& family) {
  Graph g(family.host->size());
  const auto pattern_edges = family.pattern->edges();
  for (const auto& e : family.embeddings)
    for (const auto& [u, v] : pattern_edges) g.add_edge(e.image[u], e.image[v]);
  return g;
}

namespace {

void check_inputs(const Graph& host, const Graph& pattern,
                  const LabelPartition* partition) {
  require_pattern(pattern, "pattern");
  if (partition != nullptr &&
      (partition->host_size() != host.size() ||
       partition->class_count() != pattern.size()))
    throw ValidationError(
        "label partition must cover the host with one class per pattern "
        "vertex");
}

// Number of injective maps choosing element i from set i, given the size of
// every intersection of a subfamily. Inclusion-exclusion over set partitions:
// g(S) = sum over blocks B containing min(S) of mu(B) |cap B| g(S \ B), with
// mu(B) = (-1)^(|B|-1) (|B|-1)!.
template <typename Num>
Num count_distinct_representatives(std::size_t k,
                                   const std::vector<std::size_t>& sizes) {
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<Num> g(full + 1, Num(0));
  g[0] = 1;
  std::vector<Num> mu(k + 1, Num(0));
  mu[1] = 1;
  for (std::size_t b = 2; b <= k; ++b) mu[b] = -mu[b - 1] * Num(b - 1);
  for (std::size_t s = 1; s <= full; ++s) {
    const std::size_t lowest = s & (~s + 1);
    const std::size_t rest = s ^ lowest;
    Num total = 0;
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t block = sub | lowest;
      if (sizes[block] != 0)
        total += mu[std::popcount(block)] * Num(sizes[block]) * g[s ^ block];
      if (sub == 0) break;
    }
    g[s] = total;
  }
  return g[full];
}

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern,
          const LabelPartition* partition)
      : host_(host), pattern_(pattern), partition_(partition) {
    build_order();
    image_.assign(pattern.size(), 0);
    used_ = Row(host.size());
    scratch_.assign(pattern.size(), Row(host.size()));
    std::size_t max_degree = 0;
    for (Vertex p = 0; p < pattern.size(); ++p)
      max_degree = std::max(max_degree, pattern.degree(p));
    degree_ok_.assign(max_degree + 1, Row(host.size()));
    for (Vertex x = 0; x < host.size(); ++x) {
      const std::size_t d = host.degree(x);
      for (std::size_t k = 0; k <= std::min(d, max_degree); ++k)
        degree_ok_[k].set(x);
    }
  }

  void enumerate(const std::function<bool(const Embedding&)>& visit) {
    if (pattern_.size() > host_.size()) return;
    Embedding e;
    e.image.resize(pattern_.size());
    stop_ = false;
    descend(0, [&] {
      e.image = image_;
      if (!visit(e)) stop_ = true;
    });
  }

  BigInt count() {
    if (pattern_.size() > host_.size()) return 0;
    total_ = 0;
    small_total_ = 0;
    count_from(0);
    return total_ + small_total_;
  }

 private:
  void build_order() {
    const std::size_t h = pattern_.size();
    std::vector<bool> placed(h, false);
    while (order_.size() < h) {
      Vertex start = 0;
      std::size_t best = 0;
      bool found = false;
      for (Vertex p = 0; p < h; ++p)
        if (!placed[p] && (!found || pattern_.degree(p) > best)) {
          start = p;
          best = pattern_.degree(p);
          found = true;
        }
      const std::size_t head0 = order_.size();
      order_.push_back(start);
      placed[start] = true;
      for (std::size_t head = head0; head < order_.size(); ++head)
        for (Vertex w : pattern_.neighbours(order_[head]))
          if (!placed[w]) {
            placed[w] = true;
            order_.push_back(w);
          }
    }

    std::vector<std::size_t> position(h);
    for (std::size_t k = 0; k < h; ++k) position[order_[k]] = k;
    earlier_.resize(h);
    for (std::size_t k = 0; k < h; ++k)
      for (Vertex w : pattern_.neighbours(order_[k]))
        if (position[w] < k) earlier_[k].push_back(position[w]);

    // Longest suffix of the order that is independent with every neighbour
    // already placed; its vertices can be counted without enumeration.
    tail_start_ = h;
    while (tail_start_ > 0) {
      const std::size_t k = tail_start_ - 1;
      if (earlier_[k].size() != pattern_.degree(order_[k]) ||
          earlier_[k].empty())
        break;
      const bool touches_tail = std::any_of(
          earlier_[k].begin(), earlier_[k].end(),
          [&](std::size_t pos) { return pos >= tail_start_; });
      if (touches_tail) break;
      --tail_start_;
    }
  }

  void fill_candidates(std::size_t depth, Row& out) const {
    const auto& nb = earlier_[depth];
    if (nb.empty()) {
      out.set();
    } else {
      out = host_.row(image_[order_[nb[0]]]);
      for (std::size_t i = 1; i < nb.size(); ++i)
        out &= host_.row(image_[order_[nb[i]]]);
    }
    const Vertex p = order_[depth];
    out &= degree_ok_[pattern_.degree(p)];
    if (partition_ != nullptr) out &= partition_->members(p);
    out -= used_;
  }

  template <typename Leaf>
  void descend(std::size_t depth, const Leaf& leaf) {
    if (depth == order_.size()) {
      leaf();
      return;
    }
    Row& candidates = scratch_[depth];
    fill_candidates(depth, candidates);
    const Vertex p = order_[depth];
    for (auto x = candidates.find_first(); x != Row::npos && !stop_;
         x = candidates.find_next(x)) {
      image_[p] = static_cast<Vertex>(x);
      used_.set(x);
      descend(depth + 1, leaf);
      used_.reset(x);
    }
  }

  void count_from(std::size_t depth) {
    if (depth == tail_start_) {
      count_tail();
      return;
    }
    Row& candidates = scratch_[depth];
    fill_candidates(depth, candidates);
    const Vertex p = order_[depth];
    for (auto x = candidates.find_first(); x != Row::npos;
         x = candidates.find_next(x)) {
      image_[p] = static_cast<Vertex>(x);
      used_.set(x);
      count_from(depth + 1);
      used_.reset(x);
    }
  }

  void add_small(std::uint64_t amount) {
    small_total_ += amount;
    if (small_total_ > (std::uint64_t{1} << 62)) {
      total_ += small_total_;
      small_total_ = 0;
    }
  }

  // Tail vertices have all neighbours placed and none inside the tail, so
  // their candidate sets are fixed; only distinctness couples them.
  void count_tail() {
    const std::size_t k = order_.size() - tail_start_;
    if (k == 0) {
      add_small(1);
      return;
    }
    for (std::size_t i = 0; i < k; ++i)
      fill_candidates(tail_start_ + i, scratch_[tail_start_ + i]);
    if (k == 1) {
      add_small(scratch_[tail_start_].count());
      return;
    }
    const std::size_t subsets = std::size_t{1} << k;
    std::vector<Row> meet(subsets);
    std::vector<std::size_t> sizes(subsets, 0);
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      const std::size_t low = std::countr_zero(mask);
      const std::size_t rest = mask & (mask - 1);
      if (rest == 0)
        meet[mask] = scratch_[tail_start_ + low];
      else
        meet[mask] = meet[rest] & scratch_[tail_start_ + low];
      sizes[mask] = meet[mask].count();
    }
    if (k <= 3) {
      const auto n = count_distinct_representatives<std::int64_t>(k, sizes);
      add_small(static_cast<std::uint64_t>(n));
    } else {
      total_ += count_distinct_representatives<BigInt>(k, sizes);
    }
  }

  const Graph& host_;
  const Graph& pattern_;
  const LabelPartition* partition_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> earlier_;
  std::size_t tail_start_ = 0;
  std::vector<Vertex> image_;
  Row used_;
  std::vector<Row> scratch_;
  std::vector<Row> degree_ok_;
  bool stop_ = false;
  BigInt total_;
  std::uint64_t small_total_ = 0;
};

void automorphism_search(const Graph& g, std::vector<Vertex>& sigma,
                         std::vector<bool>& used, std::size_t depth,
                         std::vector<std::vector<Vertex>>& out) {
  const std::size_t n = g.size();
  if (depth == n) {
    out.push_back(sigma);
    return;
  }
  const auto u = static_cast<Vertex>(depth);
  for (Vertex x = 0; x < n; ++x) {
    if (used[x] || g.degree(x) != g.degree(u)) continue;
    bool ok = true;
    for (Vertex w = 0; w < depth && ok; ++w)
      ok = g.has_edge(u, w) == g.has_edge(x, sigma[w]);
    if (!ok) continue;
    sigma[u] = x;
    used[x] = true;
    automorphism_search(g, sigma, used, depth + 1, out);
    used[x] = false;
  }
}

}  // namespace

void for_each_embedding(const Graph& host, const Graph& pattern,
                        const LabelPartition* partition,
                        const std::function<bool(const Embedding&)>& visit) {
  check_inputs(host, pattern, partition);
  Matcher(host, pattern, partition).enumerate(visit);
}

std::optional<Embedding> contains_copy(const Graph& host,
                                       const Graph& pattern) {
  std::optional<Embedding> found;
  for_each_embedding(host, pattern, nullptr, [&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

BigInt count_injective_homs(const Graph& host, const Graph& pattern) {
  check_inputs(host, pattern, nullptr);
  return Matcher(host, pattern, nullptr).count();
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& pattern) {
  if (pattern.size() > kMaxPatternVertices)
    throw UnsupportedSize("automorphisms: pattern exceeds " +
                          std::to_string(kMaxPatternVertices) + " vertices");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> sigma(pattern.size());
  std::vector<bool> used(pattern.size(), false);
  automorphism_search(pattern, sigma, used, 0, out);
  return out;
}

BigInt automorphism_count(const Graph& pattern) {
  return BigInt(automorphisms(pattern).size());
}

BigInt count_copies(const Graph& host, const Graph& pattern) {
  const BigInt homs = count_injective_homs(host, pattern);
  const BigInt aut = automorphism_count(pattern);
  if (homs % aut != 0)
    throw InternalError("injective hom count " + homs.str() +
                        " not divisible by |Aut| = " + aut.str());
  return homs / aut;
}

CopyFamily list_copies(const Graph& host, const Graph& pattern,
                       const std::optional<LabelPartition>& partition,
                       std::size_t cap) {
  const LabelPartition* p = partition ? &*partition : nullptr;
  check_inputs(host, pattern, p);

  CopyFamily family;
  family.host = std::make_shared<const Graph>(host);
  family.pattern = std::make_shared<const Graph>(pattern);
  family.partition = partition;

  const auto autos = p ? std::vector<std::vector<Vertex>>{} : automorphisms(pattern);
  std::vector<Vertex> variant(pattern.size());
  auto is_representative = [&](const Embedding& e) {
    for (const auto& sigma : autos) {
      for (std::size_t u = 0; u < sigma.size(); ++u)
        variant[u] = e.image[sigma[u]];
      if (variant < e.image) return false;
    }
    return true;
  };

  Matcher(host, pattern, p).enumerate([&](const Embedding& e) {
    // With a partition each copy has exactly one rainbow embedding.
    if (p == nullptr && !is_representative(e)) return true;
    if (family.embeddings.size() == cap) {
      family.truncated = true;
      return false;
    }
    family.embeddings.push_back(e);
    return true;
  });
  std::sort(family.embeddings.begin(), family.embeddings.end());
  return family;
}

}  // namespace turan
