#pragma once

#include <map>
#include <optional>
#include <string>

#include "alliance/bounds.hpp"
#include "alliance/graph.hpp"
#include "alliance/invariants.hpp"
#include "alliance/solvers.hpp"

namespace alliance {

struct ParseOptions {
    /// Shift vertex ids by one on parse/print (for transcribing material
    /// that labels vertices 1..n).
    bool one_indexed = false;
};

/// Edge-list document: optional "n <count>" header line, then one "u v"
/// edge per line; lines starting with '#' are comments. Without a header
/// the order is 1 + the largest vertex id. Self-loops, duplicate edges
/// (either orientation), malformed lines and out-of-range ids raise
/// parse_error with the offending line number.
Graph parse_edge_list(const std::string& text, const ParseOptions& opts = {});

/// Inverse of parse_edge_list: header plus sorted edges.
std::string format_edge_list(const Graph& g, const ParseOptions& opts = {});

/// Everything the `bounds` command reports for one graph. Exact values that
/// sit beyond the capacity guards are simply absent.
struct ReportDocument {
    int schema_version = 1;
    Graph graph;
    bool connected = false;
    std::optional<int> diameter;
    std::optional<WitnessedValue> alpha;
    std::optional<WitnessedValue> gamma;
    std::optional<WitnessedValue> gamma2;
    std::optional<WitnessedValue> gamma_c;
    SpectralResult mu{0.0, 0.0};
    std::map<std::string, SolveResult> alliance_numbers; // keyed by kind name
    std::vector<BoundRecord> bounds;
};

ReportDocument build_report(const Graph& g, const BoundOptions& opts = {});

/// Deterministic JSON rendering: two runs on the same graph are
/// byte-identical.
std::string report_to_json(const ReportDocument& doc);

/// Parses and validates a report: schema version 1, no unknown fields, and
/// every stored witness re-verified against its predicate. Throws
/// parse_error on any mismatch.
ReportDocument load_report(const std::string& json_text);

} // namespace alliance
