#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "turan/graph.hh"

namespace turan {

enum class GraphFormat { kGraph6, kEdgeList };

/// graph6 follows the nauty format description (6-bit groups offset by 63,
/// upper triangle in column order). Edge-list text is one "u v" pair per line
/// with 0-based indices, optionally preceded by a line "n=<count>".
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

/// Guesses the format of a file body: edge-list if it holds whitespace-
/// separated tokens or an "n=" header, graph6 otherwise.
GraphFormat sniff_format(std::string_view text);

/// Calls `fn` for every graph in a newline-delimited graph6 stream. Blank
/// lines are skipped. Returns the number of graphs read.
std::size_t for_each_graph6(std::istream& in,
                            const std::function<void(Graph)>& fn);

}  // namespace turan
