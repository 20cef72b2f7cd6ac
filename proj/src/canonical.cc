#include "turan/canonical.hh"

#include <cstdint>
#include <limits>

#include "turan/errors.hh"
#include "turan/graph_io.hh"

namespace turan {

namespace {

// The graph6 body for n <= 10 is at most 45 bits, so a whole candidate
// labelling fits in one word. Column k (new vertex k against new vertices
// 0..k-1) is appended in order, most significant bit first.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.size()), order_(n_), used_(n_, false) {
    total_bits_ = n_ * (n_ == 0 ? 0 : n_ - 1) / 2;
  }

  std::vector<Vertex> run() {
    descend(0, 0);
    return best_order_;
  }

 private:
  void descend(std::size_t depth, std::uint64_t prefix) {
    if (depth == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const std::size_t prefix_bits = depth * (depth + 1) / 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::uint64_t next = prefix;
      for (std::size_t i = 0; i < depth; ++i)
        next = (next << 1) | (g_.has_edge(order_[i], v) ? 1u : 0u);
      if (have_best_) {
        const std::uint64_t best_prefix = best_ >> (total_bits_ - prefix_bits);
        if (next > best_prefix) continue;
      }
      used_[v] = true;
      order_[depth] = v;
      descend(depth + 1, next);
      used_[v] = false;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t total_bits_ = 0;
  std::vector<Vertex> order_;
  std::vector<bool> used_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
  std::vector<Vertex> best_order_;
};

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g) {
  if (g.size() > kMaxPatternVertices)
    throw UnsupportedSize("canonical form supports at most " +
                          std::to_string(kMaxPatternVertices) + " vertices");
  const auto order = CanonicalSearch(g).run();
  CanonicalLabelling out;
  out.perm.resize(g.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    out.perm[order[k]] = static_cast<Vertex>(k);
  out.graph6 = serialize_graph(g.relabelled(out.perm), GraphFormat::kGraph6);
  return out;
}

}  // namespace turan
