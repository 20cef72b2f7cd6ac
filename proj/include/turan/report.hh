#pragma once

#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "turan/blowup.hh"
#include "turan/extremal.hh"
#include "turan/pipeline.hh"
#include "turan/subgraph.hh"

namespace turan {

// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
using Json = nlohmann::json;

/// Big integers travel as decimal strings.
inline Json big_json(const BigInt& x) { return x.str(); }

/// 64-bit FNV-1a of the graph6 encoding, as 16 hex digits.
std::string graph_hash(const Graph& g);

Json to_json(const Graph& g);
Json to_json(const ExponentProfile& p);
Json to_json(const BlowupResult& b);
Json to_json(const CopyFamily& f);
Json to_json(const ExSearchResult& r);
Json to_json(const GrowthReport& r);
Json to_json(const OracleComparison& c);
Json to_json(const TraceStep& s);
Json to_json(const ProcedureOutcome& o);
Json to_json(const ColouredDigraph& d);
Json to_json(const ASelection& s);
Json to_json(const EmbeddingCertificate& c);
Json to_json(const PipelineReport& r);

/// Inverse of to_json(ExponentProfile); throws ValidationError on bad input.
ExponentProfile profile_from_json(const Json& j);

/// One JSON object per refinement round, newline-terminated.
std::string trace_json_lines(const ProcedureOutcome& o);

enum class ReportFormat { kJson, kCsv };

using Document =
    std::variant<ExponentProfile, BlowupResult, CopyFamily, ExSearchResult,
                 GrowthReport, OracleComparison, ProcedureOutcome,
                 PipelineReport>;

/// Deterministic text for a document. CSV exists only for the tabular
/// documents (growth reports and oracle comparisons); any other document
/// raises ValidationError.
std::string report_emit(const Document& doc, ReportFormat format);

}  // namespace turan
