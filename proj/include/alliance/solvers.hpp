#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/graph.hpp"

namespace alliance {

enum class Connectedness { None, AllianceConnected };

struct SolveResult {
    AllianceKind kind;
    Connectedness connectedness;
    int value;
    VertexSet witness;          // lexicographically smallest optimum
    long long nodes_explored;   // candidate sets evaluated
};

struct SolveOptions {
    /// Start the cardinality scan at the best applicable catalog lower bound
    /// instead of 1. Never changes the result, only the node count.
    bool seed_from_bounds = true;
    /// Override for the exact-search order guard (default via
    /// ALLIANCE_EXACT_CAP or 24). Larger graphs raise capacity_error.
    std::optional<int> exact_cap;
};

struct EnumerateOptions {
    /// Override for the exhaustive-enumeration order guard (default via
    /// ALLIANCE_ENUM_CAP or 16).
    std::optional<int> enum_cap;
    std::size_t limit = static_cast<std::size_t>(-1);
};

int default_exact_cap();
int default_enum_cap();

/// Exact minimum alliance of the requested kind. Cardinality-ascending scan
/// over subset masks; each cardinality class is first scanned in colex
/// (Gosper) order for existence, then rescanned lexicographically for the
/// canonical witness.
SolveResult min_alliance(const Graph& g, AllianceKind kind, const SolveOptions& opts = {});

/// Exact minimum global (strong) offensive alliance inducing a connected
/// subgraph. Requires a connected graph and a global kind.
SolveResult min_connected_alliance(const Graph& g, AllianceKind kind,
                                   const SolveOptions& opts = {});

/// All minimal alliances of the kind, optionally filtered to those whose
/// complement induces a connected subgraph (an empty complement never
/// qualifies). Results sorted by (cardinality, lexicographic), truncated at
/// opts.limit.
std::vector<VertexSet> enumerate_minimal_global_alliances(const Graph& g, AllianceKind kind,
                                                          bool require_connected_complement,
                                                          const EnumerateOptions& opts = {});

} // namespace alliance
