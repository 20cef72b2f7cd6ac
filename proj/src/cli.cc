#include "turan/cli.hh"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "turan/blowup.hh"
#include "turan/cache.hh"
#include "turan/errors.hh"
#include "turan/extremal.hh"
#include "turan/graph_io.hh"
#include "turan/pipeline.hh"
#include "turan/report.hh"

namespace turan {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// "-" reads standard input, "@path" a file (format sniffed), anything else is
// inline graph6.
Graph load_graph(const std::string& arg, const char* name, std::istream& in) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (!arg.empty() && arg[0] == '@') {
    std::ifstream file(arg.substr(1), std::ios::binary);
    if (!file) throw ValidationError(std::string(name) + ": cannot read " + arg.substr(1));
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    return parse_graph(arg, GraphFormat::kGraph6);
  }
  text = trim(std::move(text));
  try {
    return parse_graph(text, sniff_format(text));
  } catch (const ParseError& e) {
    throw ValidationError(std::string(name) + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-')
    throw ValidationError(std::string(what) + ": not a non-negative integer: " + text);
  return static_cast<std::size_t>(value);
}

std::vector<std::size_t> parse_counts(const std::string& text, const char* what) {
  std::vector<std::size_t> values;
  for (const auto& item : split_list(text)) values.push_back(parse_count(item, what));
  return values;
}

BigInt parse_big(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("constants: not a non-negative integer: " + text);
  return BigInt(text);
}

void emit_graph(std::ostream& out, const Json& doc, const Graph& g,
                const std::string& format) {
  if (format == "graph6")
    out << serialize_graph(g, GraphFormat::kGraph6) << "\n";
  else if (format == "edgelist")
    out << serialize_graph(g, GraphFormat::kEdgeList) << "\n";
  else
    out << doc.dump(2) << "\n";
}

struct Options {
  std::string g, h, t, u, ns, constants, store, format = "json";
  std::size_t n = 0, copies = 0;
  bool csv = false, stream = false, compare = false, proof_scale = false,
       trace = false;
};

}  // namespace

int run_guarded(const std::function<void()>& body, std::ostream& err) {
  try {
    body();
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Turan numbers for forbidden trees", "turan"};
  app.require_subcommand(1);
  Options o;

  const auto graph_note = "graph6, @file or - for standard input";
  auto* exponent = app.add_subcommand("exponent", "growth exponent r(H,T)");
  exponent->add_option("--H", o.h, graph_note)->required();
  exponent->add_option("--T", o.t, "forbidden tree")->required();

  auto* blowup = app.add_subcommand("blowup", "(U,t)-blow-up of H");
  blowup->add_option("--H", o.h, graph_note)->required();
  blowup->add_option("--U", o.u, "comma-separated vertices kept shared");
  blowup->add_option("--t", o.copies, "number of copies")->required();
  blowup->add_option("--format", o.format, "json, graph6 or edgelist")
      ->check(CLI::IsMember({"json", "graph6", "edgelist"}));

  auto* count = app.add_subcommand("count", "number of copies of H in G");
  count->add_option("--G", o.g, graph_note)->required();
  count->add_option("--H", o.h, graph_note)->required();

  auto* contains = app.add_subcommand("contains", "find one copy of H in G");
  contains->add_option("--G", o.g, graph_note)->required();
  contains->add_option("--H", o.h, graph_note)->required();

  auto* construct = app.add_subcommand("construct", "T-free construction on n vertices");
  construct->add_option("--H", o.h, graph_note)->required();
  construct->add_option("--T", o.t, "forbidden tree")->required();
  construct->add_option("--n", o.n, "vertex count")->required();
  construct->add_option("--format", o.format, "json, graph6 or edgelist")
      ->check(CLI::IsMember({"json", "graph6", "edgelist"}));

  auto* brute = app.add_subcommand("brute-force", "exact Ex(n,H,T) for small n");
  brute->add_option("--H", o.h, graph_note)->required();
  brute->add_option("--T", o.t, "forbidden tree")->required();
  brute->add_option("--n", o.n, "vertex count")->required();
  brute->add_flag("--stream", o.stream, "read candidate graphs as graph6 from standard input");
  brute->add_flag("--compare", o.compare, "report optimum next to the construction");
  brute->add_flag("--csv", o.csv, "CSV output (with --compare)");

  auto* growth = app.add_subcommand("growth", "construction counts over several n");
  growth->add_option("--H", o.h, graph_note)->required();
  growth->add_option("--T", o.t, "forbidden tree")->required();
  growth->add_option("--ns", o.ns, "comma-separated ascending vertex counts")->required();
  growth->add_flag("--csv", o.csv, "CSV output");

  auto* pipeline = app.add_subcommand("pipeline", "run the upper-bound machinery on G");
  pipeline->add_option("--G", o.g, graph_note)->required();
  pipeline->add_option("--H", o.h, graph_note)->required();
  pipeline->add_option("--T", o.t, "forbidden tree")->required();
  auto* constants = pipeline->add_option("--constants", o.constants,
                                         "comma-separated c_1,...,c_e(H)");
  auto* proof = pipeline->add_flag("--proof-scale", o.proof_scale,
                                   "derive the constants from the recursion");
  constants->excludes(proof);
  pipeline->add_flag("--trace", o.trace, "refinement trace as JSON lines on standard error");

  auto* cache = app.add_subcommand("cache", "exponent through the profile store");
  cache->add_option("--H", o.h, graph_note)->required();
  cache->add_option("--T", o.t, "forbidden tree")->required();
  cache->add_option("--store", o.store, "store path (default $TURAN_CACHE)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 1;
  }

  return run_guarded([&] {
    if (*exponent) {
      const auto p = exponent_r(load_graph(o.h, "H", in), load_graph(o.t, "T", in));
      out << report_emit(p, ReportFormat::kJson);
    } else if (*blowup) {
      std::vector<Vertex> u;
      for (const auto& item : split_list(o.u))
        u.push_back(static_cast<Vertex>(parse_count(item, "U")));
      const auto b = blow_up(load_graph(o.h, "H", in), u, o.copies);
      emit_graph(out, to_json(b), b.graph, o.format);
    } else if (*count) {
      const Graph g = load_graph(o.g, "G", in);
      const Graph h = load_graph(o.h, "H", in);
      const Json doc{{"copies", big_json(count_copies(g, h))},
                     {"injective_homs", big_json(count_injective_homs(g, h))},
                     {"automorphisms", big_json(automorphism_count(h))}};
      out << doc.dump(2) << "\n";
    } else if (*contains) {
      const auto copy = contains_copy(load_graph(o.g, "G", in), load_graph(o.h, "H", in));
      Json doc{{"contains", copy.has_value()}, {"embedding", nullptr}};
      if (copy) doc["embedding"] = copy->image;
      out << doc.dump(2) << "\n";
    } else if (*construct) {
      const Graph h = load_graph(o.h, "H", in);
      const Graph t = load_graph(o.t, "T", in);
      const Graph g = lower_bound_construction(h, t, o.n);
      const Json doc{{"n", o.n},
                     {"graph", to_json(g)},
                     {"copies", big_json(count_copies(g, h))},
                     {"profile", to_json(exponent_r(h, t))}};
      emit_graph(out, doc, g, o.format);
    } else if (*brute) {
      const Graph h = load_graph(o.h, "H", in);
      const Graph t = load_graph(o.t, "T", in);
      if (o.compare) {
        if (o.stream) throw ValidationError("--compare uses the internal enumeration; drop --stream");
        out << report_emit(oracle_vs_construction(o.n, h, t),
                           o.csv ? ReportFormat::kCsv : ReportFormat::kJson);
      } else {
        const auto result = o.stream ? brute_force_ex(o.n, h, t, in)
                                     : brute_force_ex(o.n, h, t);
        out << report_emit(result, o.csv ? ReportFormat::kCsv : ReportFormat::kJson);
      }
    } else if (*growth) {
      const auto ns = parse_counts(o.ns, "ns");
      const auto report = growth_report(load_graph(o.h, "H", in), load_graph(o.t, "T", in), ns);
      out << report_emit(report, o.csv ? ReportFormat::kCsv : ReportFormat::kJson);
    } else if (*pipeline) {
      const Graph g = load_graph(o.g, "G", in);
      const Graph h = load_graph(o.h, "H", in);
      const Graph t = load_graph(o.t, "T", in);
      ProcedureConfig config;
      if (o.proof_scale) {
        config = ProcedureConfig::proof_scale(h, t.size());
      } else {
        if (o.constants.empty())
          throw ValidationError("pipeline needs --constants or --proof-scale");
        std::vector<BigInt> values;
        for (const auto& item : split_list(o.constants)) values.push_back(parse_big(item));
        config = ProcedureConfig::desk_scale(std::move(values), t.size());
      }
      const auto report = run_pipeline(g, h, t, config);
      if (o.trace && report.outcome) err << trace_json_lines(*report.outcome);
      out << report_emit(report, ReportFormat::kJson);
    } else if (*cache) {
      const auto path = o.store.empty() ? default_cache_path()
                                        : std::filesystem::path(o.store);
      const auto lookup = cache_lookup_or_compute(load_graph(o.h, "H", in),
                                                  load_graph(o.t, "T", in), path, &err);
      const Json doc{{"profile", to_json(lookup.profile)},
                     {"hit", lookup.hit},
                     {"stored", lookup.stored},
                     {"store", path.string()}};
      out << doc.dump(2) << "\n";
    }
  }, err);
}

}  // namespace turan
