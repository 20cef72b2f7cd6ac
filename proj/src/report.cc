#include "turan/report.hh"

#include <cstdint>
#include <cstdio>

#include "turan/errors.hh"
#include "turan/graph_io.hh"

namespace turan {

namespace {

const char* branch_name(TraceStep::Branch b) {
  return b == TraceStep::Branch::kFilter ? "filter" : "restrict";
}

Json pair_json(const DirectedPair& p) { return Json::array({p.from, p.to}); }

std::string format_slope(double slope) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", slope);
  return buffer;
}

}  // namespace

std::string graph_hash(const Graph& g) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : serialize_graph(g, GraphFormat::kGraph6)) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

Json to_json(const Graph& g) {
  return {{"n", g.size()},
          {"edges", g.edge_count()},
          {"graph6", serialize_graph(g, GraphFormat::kGraph6)}};
}

Json to_json(const ExponentProfile& p) {
  Json j{{"status", p.status == ExponentStatus::kFinite ? "Finite" : "Zero"},
         {"t_used", p.t_used}};
  if (p.status == ExponentStatus::kFinite) {
    j["r"] = p.r;
    j["witness_U"] = p.witness_U;
  }
  return j;
}

ExponentProfile profile_from_json(const Json& j) {
  try {
    ExponentProfile p;
    const auto status = j.at("status").get<std::string>();
    if (status == "Finite") {
      p.status = ExponentStatus::kFinite;
      p.r = j.at("r").get<std::size_t>();
      p.witness_U = j.at("witness_U").get<std::vector<Vertex>>();
    } else if (status == "Zero") {
      p.status = ExponentStatus::kZero;
    } else {
      throw ValidationError("unknown profile status " + status);
    }
    p.t_used = j.at("t_used").get<std::size_t>();
    return p;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed profile: ") + e.what());
  }
}

Json to_json(const BlowupResult& b) {
  return {{"graph", to_json(b.graph)},
          {"phi", b.phi},
          {"copy_index", b.copy_index},
          {"U", mask_to_vertices(b.identified)},
          {"t", b.copies}};
}

Json to_json(const CopyFamily& f) {
  Json embeddings = Json::array();
  for (const auto& e : f.embeddings) embeddings.push_back(e.image);
  Json j{{"host_hash", graph_hash(*f.host)},
         {"pattern_hash", graph_hash(*f.pattern)},
         {"pattern", serialize_graph(*f.pattern, GraphFormat::kGraph6)},
         {"size", f.size()},
         {"truncated", f.truncated},
         {"embeddings", std::move(embeddings)}};
  if (f.partition) j["labels"] = f.partition->labels();
  return j;
}

Json to_json(const ExSearchResult& r) {
  return {{"n", r.n},
          {"max_count", big_json(r.max_count)},
          {"witness", to_json(r.witness)},
          {"graphs_examined", r.graphs_examined},
          {"source", r.source == ExSource::kInternal ? "internal-enumeration"
                                                     : "graph6-stream"}};
}

Json to_json(const GrowthReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"n", row.n}, {"count", big_json(row.count)}});
  return {{"rows", std::move(rows)}, {"slopes", r.slopes}, {"r_claimed", r.r_claimed}};
}

Json to_json(const OracleComparison& c) {
  return {{"n", c.n},
          {"oracle", big_json(c.oracle)},
          {"construction", big_json(c.construction)}};
}

Json to_json(const TraceStep& s) {
  Json sizes = Json::array();
  for (const auto& [pair, size] : s.b_sizes)
    sizes.push_back({{"edge", pair_json(pair)}, {"size", size}});
  Json j{{"i", s.i},
         {"j", s.j},
         {"branch", branch_name(s.branch)},
         {"family_size", s.family_size},
         {"kept", s.kept},
         {"red_count", s.red_count},
         {"B_sizes", std::move(sizes)},
         {"retention_ok", s.retention_ok}};
  if (s.removed) j["removed"] = pair_json(*s.removed);
  return j;
}

Json to_json(const ProcedureOutcome& o) {
  Json red = Json::array();
  for (const auto& p : o.remaining_red) red.push_back(pair_json(p));
  Json sizes = Json::array();
  for (const auto& f : o.families) sizes.push_back(f.size());
  Json trace = Json::array();
  for (const auto& s : o.trace) trace.push_back(to_json(s));
  Json j{{"kind", o.kind == ProcedureOutcome::Kind::kSparse ? "Sparse"
                                                            : "Structured"},
         {"l", o.l},
         {"remaining_red", std::move(red)},
         {"family_sizes", std::move(sizes)},
         {"trace", std::move(trace)}};
  if (o.sparse_bound)
    j["sparse_bound"] = {{"a", o.sparse_bound->components},
                         {"n", o.sparse_bound->host_size},
                         {"counted", big_json(o.sparse_bound->counted)},
                         {"bound", big_json(o.sparse_bound->bound)},
                         {"holds", o.sparse_bound->holds}};
  return j;
}

Json to_json(const ColouredDigraph& d) {
  Json arcs = Json::array();
  for (const auto& a : d.arcs)
    arcs.push_back({{"from", a.from},
                    {"to", a.to},
                    {"colour", a.colour == ArcColour::kRed ? "red" : "blue"}});
  Json condensation = Json::array();
  for (const auto& [from, to] : d.condensation)
    condensation.push_back(Json::array({from, to}));
  return {{"arcs", std::move(arcs)},
          {"parts", d.parts},
          {"condensation", std::move(condensation)}};
}

Json to_json(const ASelection& s) {
  return {{"A", s.A}, {"W", s.W}, {"U", s.U}, {"reach_sum", s.reach_sum}};
}

Json to_json(const EmbeddingCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps)
    steps.push_back({{"block", s.block},
                     {"region", s.region},
                     {"family", s.family},
                     {"copy", s.copy},
                     {"attach", Json::array({s.attach_tree, s.attach_block})},
                     {"red_attachment", s.red_attachment},
                     {"disjoint_copies", s.disjoint_copies}});
  return {{"tree_map", c.tree_map.image},
          {"x_partition", c.x_partition},
          {"steps", std::move(steps)}};
}

Json to_json(const PipelineReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"lhs", big_json(c.lhs)},
                      {"rhs", big_json(c.rhs)},
                      {"relation", c.relation == ThresholdCheck::Relation::kAtLeast
                                       ? ">="
                                       : "<="},
                      {"holds", c.holds}});
  Json j{{"h", r.h},
         {"t", r.t},
         {"n", r.host_size},
         {"m", big_json(r.total_copies)},
         {"stage", r.stage},
         {"rainbow_copies", r.rainbow_copies},
         {"degeneracy", r.degeneracy},
         {"order_H", r.order_h},
         {"ordered_copies", r.ordered_copies},
         {"checks", std::move(checks)},
         {"flags", r.flags},
         {"input_t_free_violated", r.input_t_free_violated()}};
  if (r.outcome) j["procedure"] = to_json(*r.outcome);
  if (r.outcome && r.outcome->kind == ProcedureOutcome::Kind::kSparse)
    j["a"] = r.components;
  if (r.profile) j["profile"] = to_json(*r.profile);
  if (r.digraph) j["digraph"] = to_json(*r.digraph);
  if (r.selection) j["selection"] = to_json(*r.selection);
  if (r.digraph) {
    j["blowup_size"] = r.blowup_size;
    j["blowup_contains_T"] = r.blowup_contains_t;
  }
  if (r.t_copy) j["t_copy"] = to_json(*r.t_copy);
  if (r.embedding_failure)
    j["embedding_failure"] = {{"step", r.embedding_failure->step},
                              {"reason", r.embedding_failure->reason}};
  return j;
}

std::string trace_json_lines(const ProcedureOutcome& o) {
  std::string out;
  for (const auto& s : o.trace) out += to_json(s).dump() + "\n";
  return out;
}

std::string report_emit(const Document& doc, ReportFormat format) {
  if (format == ReportFormat::kJson)
    return std::visit([](const auto& d) { return to_json(d).dump(2); }, doc) +
           "\n";

  if (const auto* growth = std::get_if<GrowthReport>(&doc)) {
    std::string out = "n,count,slope\n";
    for (std::size_t i = 0; i < growth->rows.size(); ++i) {
      out += std::to_string(growth->rows[i].n) + "," +
             growth->rows[i].count.str() + ",";
      if (i > 0) out += format_slope(growth->slopes[i - 1]);
      out += "\n";
    }
    return out;
  }
  if (const auto* cmp = std::get_if<OracleComparison>(&doc))
    return "n,oracle,construction\n" + std::to_string(cmp->n) + "," +
           cmp->oracle.str() + "," + cmp->construction.str() + "\n";
  throw ValidationError("unsupported format: CSV needs a tabular document");
}

}  // namespace turan
