#include "turan/extremal.hh"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "turan/canonical.hh"
#include "turan/errors.hh"
#include "turan/graph_io.hh"
#include "turan/subgraph.hh"

namespace turan {

namespace {

ExponentProfile finite_profile(const Graph& h, const Graph& t) {
  auto profile = exponent_r(h, t);
  if (profile.status == ExponentStatus::kZero)
    throw ValidationError("H contains T, Ex = 0");
  return profile;
}

Graph construction_for(const Graph& h, const Graph& t,
                       const ExponentProfile& profile, std::size_t n) {
  if (n < h.size())
    throw ValidationError("construction needs n >= |H| = " +
                          std::to_string(h.size()));
  const std::size_t u = profile.witness_U.size();
  Graph g;
  if (u == h.size()) {
    g = h.padded(n);
  } else {
    const std::size_t copies = (n - u) / (h.size() - u);
    g = blow_up(h, profile.witness_U, copies).graph.padded(n);
  }
  if (contains_copy(g, t))
    throw InternalError("lower-bound construction contains T");
  return g;
}

// Running maximum with the smallest-canonical-form tie-break.
class Best {
 public:
  void offer(const Graph& g, const BigInt& count, const std::string& key) {
    if (!have_ || count > count_ || (count == count_ && key < key_)) {
      have_ = true;
      count_ = count;
      key_ = key;
      witness_ = g;
    }
  }

  ExSearchResult finish(std::size_t n, std::size_t examined, ExSource source,
                        const Graph& h, const Graph& t) const {
    ExSearchResult out;
    out.n = n;
    out.graphs_examined = examined;
    out.source = source;
    if (!have_) throw ValidationError("no T-free graph was examined");
    out.max_count = count_;
    out.witness = witness_;
    if (contains_copy(out.witness, t) ||
        count_copies(out.witness, h) != out.max_count)
      throw InternalError("brute-force witness failed re-verification");
    return out;
  }

 private:
  bool have_ = false;
  BigInt count_;
  std::string key_;
  Graph witness_;
};

}  // namespace

Graph lower_bound_construction(const Graph& h, const Graph& t, std::size_t n) {
  return construction_for(h, t, finite_profile(h, t), n);
}

ExSearchResult brute_force_ex(std::size_t n, const Graph& h, const Graph& t) {
  require_pattern(h, "H");
  require_tree_pattern(t);
  if (n == 0 || n > kMaxInternalBruteForce)
    throw UnsupportedSize("internal brute force supports 1 <= n <= " +
                          std::to_string(kMaxInternalBruteForce));

  Best best;
  std::size_t examined = 0;
  std::set<std::string> seen;
  std::vector<std::string> frontier{canonical_form(Graph(n))};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& key : frontier) {
      const Graph g = parse_graph(key, GraphFormat::kGraph6);
      ++examined;
      if (contains_copy(g, t)) continue;
      best.offer(g, count_copies(g, h), key);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph child = g;
          child.add_edge(u, v);
          auto child_key = canonical_form(child);
          if (seen.insert(child_key).second) next.push_back(std::move(child_key));
        }
    }
    frontier = std::move(next);
  }
  return best.finish(n, examined, ExSource::kInternal, h, t);
}

ExSearchResult brute_force_ex(std::size_t n, const Graph& h, const Graph& t,
                              std::istream& stream) {
  require_pattern(h, "H");
  require_tree_pattern(t);
  Best best;
  std::size_t examined = 0;
  for_each_graph6(stream, [&](Graph g) {
    if (g.size() != n)
      throw ValidationError("stream graph " + std::to_string(examined + 1) +
                            " has " + std::to_string(g.size()) +
                            " vertices, expected " + std::to_string(n));
    ++examined;
    if (contains_copy(g, t)) return;
    const std::string key = n <= kMaxPatternVertices
                                ? canonical_form(g)
                                : serialize_graph(g, GraphFormat::kGraph6);
    best.offer(g, count_copies(g, h), key);
  });
  return best.finish(n, examined, ExSource::kStream, h, t);
}

GrowthReport growth_report(const Graph& h, const Graph& t,
                           std::span<const std::size_t> ns) {
  const auto profile = finite_profile(h, t);
  GrowthReport report;
  report.r_claimed = profile.r;
  const std::size_t floor_n = h.size() * t.size();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < floor_n)
      throw ValidationError("growth sizes must be at least h*t = " +
                            std::to_string(floor_n));
    if (i > 0 && ns[i] <= ns[i - 1])
      throw ValidationError("growth sizes must be strictly ascending");
  }
  for (std::size_t n : ns) {
    const Graph g = construction_for(h, t, profile, n);
    BigInt count = count_copies(g, h);
    const BigInt floor_bound =
        big_pow(BigInt(n / h.size()), static_cast<unsigned>(profile.r));
    if (count < floor_bound)
      throw InternalError("construction at n=" + std::to_string(n) +
                          " has fewer than floor(n/h)^r copies");
    report.rows.push_back({n, std::move(count)});
  }
  for (std::size_t i = 0; i + 1 < report.rows.size(); ++i) {
    const auto& a = report.rows[i];
    const auto& b = report.rows[i + 1];
    report.slopes.push_back((big_log(b.count) - big_log(a.count)) /
                            (std::log(double(b.n)) - std::log(double(a.n))));
  }
  return report;
}

OracleComparison oracle_vs_construction(std::size_t n, const Graph& h,
                                        const Graph& t) {
  OracleComparison out;
  out.n = n;
  out.oracle = brute_force_ex(n, h, t).max_count;
  out.construction = count_copies(lower_bound_construction(h, t, n), h);
  if (out.oracle < out.construction)
    throw InternalError("construction beats the brute-force optimum");
  return out;
}

}  // namespace turan
