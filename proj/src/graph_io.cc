#include "turan/graph_io.hh"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <vector>

#include "turan/errors.hh"

namespace turan {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("truncated graph6 string", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kOffset || c > 126)
    throw ParseError("invalid graph6 character", pos);
  return c - kOffset;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  std::uint64_t n = 0;
  if (sixbits(text, pos) < 63) {
    n = static_cast<std::uint64_t>(sixbits(text, pos++));
  } else if (pos + 1 < text.size() && sixbits(text, pos + 1) == 63) {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | sixbits(text, pos++);
  } else {
    pos += 1;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sixbits(text, pos++);
  }
  if (n > kMaxHostVertices)
    throw UnsupportedSize("graph6 header declares " + std::to_string(n) +
                          " vertices");

  Graph g(n);
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos < body)
    throw ParseError("truncated graph6 body", text.size());
  if (text.size() - pos > body)
    throw ParseError("trailing bytes after graph6 body", pos + body);

  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      if (sixbits(text, at) & (1 << (5 - k % 6))) g.add_edge(i, j);
    }
  // Padding bits must be zero.
  for (; k < body * 6; ++k) {
    const std::size_t at = pos + k / 6;
    if (sixbits(text, at) & (1 << (5 - k % 6)))
      throw ParseError("nonzero graph6 padding bit", at);
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Parses an unsigned integer token starting at line[pos], advancing pos.
// `base` is the offset of the line within the whole input.
std::uint64_t read_number(std::string_view text, std::size_t& pos,
                          std::size_t base) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
  std::uint64_t value = 0;
  const auto* first = text.data() + pos;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first)
    throw ParseError("expected a vertex index", base + pos);
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared;
  std::uint64_t max_index = 0;
  bool any = false;
  bool first_line = true;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t pos = 0;
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos < line.size()) {
      if (line.substr(pos).starts_with("n=")) {
        if (!first_line)
          throw ParseError("n= header must be the first line",
                           line_start + pos);
        pos += 2;
        declared = read_number(line, pos, line_start);
      } else {
        const std::uint64_t u = read_number(line, pos, line_start);
        const std::uint64_t v = read_number(line, pos, line_start);
        if (u >= kMaxHostVertices || v >= kMaxHostVertices)
          throw UnsupportedSize("vertex index beyond host cap");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        max_index = std::max({max_index, u, v});
        any = true;
      }
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos != line.size())
        throw ParseError("unexpected trailing characters", line_start + pos);
      first_line = false;
    }
    line_start = line_end + 1;
  }

  std::uint64_t n = declared.value_or(any ? max_index + 1 : 0);
  if (declared && any && max_index >= *declared)
    throw ValidationError("edge endpoint " + std::to_string(max_index) +
                          " exceeds declared n=" + std::to_string(*declared));
  if (n > kMaxHostVertices)
    throw UnsupportedSize("edge list declares too many vertices");
  return Graph::from_edges(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.size());
  for (const auto& [u, v] : g.edges())
    out += "\n" + std::to_string(u) + " " + std::to_string(v);
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? parse_graph6(text)
                                        : parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? serialize_graph6(g)
                                        : serialize_edge_list(g);
}

GraphFormat sniff_format(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (is_space(text[i]) || text[i] == '\n')) ++i;
  text.remove_prefix(i);
  if (text.starts_with("n=")) return GraphFormat::kEdgeList;
  const auto line = text.substr(0, text.find('\n'));
  return line.find_first_of(" \t") != std::string_view::npos
             ? GraphFormat::kEdgeList
             : GraphFormat::kGraph6;
}

std::size_t for_each_graph6(std::istream& in,
                            const std::function<void(Graph)>& fn) {
  std::size_t count = 0;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t length = line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      try {
        fn(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError("graph6 stream line " + std::to_string(line_no) +
                             ": " + e.what(),
                         offset + e.offset());
      }
      ++count;
    }
    offset += length;
  }
  return count;
}

}  // namespace turan
