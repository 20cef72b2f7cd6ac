#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "turan/bigint.hh"
#include "turan/blowup.hh"
#include "turan/graph.hh"

namespace turan {

/// T-free n-vertex graph with many copies of H: the (U, floor((n-|U|)/(h-|U|)))
/// blow-up of H for the exponent witness U, padded with isolated vertices.
/// Throws ValidationError if H contains T or n < |H|.
Graph lower_bound_construction(const Graph& h, const Graph& t, std::size_t n);

enum class ExSource { kInternal, kStream };

struct ExSearchResult {
  std::size_t n = 0;
  BigInt max_count;
  Graph witness;
  std::size_t graphs_examined = 0;
  ExSource source = ExSource::kInternal;
};

inline constexpr std::size_t kMaxInternalBruteForce = 8;

/// Exact Ex(n, H, T) by exhaustion over isomorphism classes of n-vertex
/// graphs. Classes are generated by single-edge augmentation with canonical
/// deduplication; graphs containing T are not extended, since every supergraph
/// of them contains T too. Ties go to the smallest canonical form.
ExSearchResult brute_force_ex(std::size_t n, const Graph& h, const Graph& t);

/// Same maximisation over a newline-delimited graph6 stream of n-vertex
/// graphs (for instance the output of an external generator).
ExSearchResult brute_force_ex(std::size_t n, const Graph& h, const Graph& t,
                              std::istream& stream);

struct GrowthReport {
  struct Row {
    std::size_t n;
    BigInt count;
  };
  std::vector<Row> rows;
  std::vector<double> slopes;  // slopes[i] between rows i and i+1
  std::size_t r_claimed = 0;
};

/// Copy counts of the lower-bound construction at each n, with log-log
/// slopes between consecutive rows. Also checks count >= floor(n/h)^r.
GrowthReport growth_report(const Graph& h, const Graph& t,
                           std::span<const std::size_t> ns);

struct OracleComparison {
  std::size_t n = 0;
  BigInt oracle;
  BigInt construction;
};

/// Brute-force optimum next to the construction's count; throws
/// InternalError if the construction beats the optimum.
OracleComparison oracle_vs_construction(std::size_t n, const Graph& h,
                                        const Graph& t);

}  // namespace turan
