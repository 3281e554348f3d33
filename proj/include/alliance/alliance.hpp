#pragma once

#include <optional>
#include <string>

#include "alliance/graph.hpp"
#include "alliance/vertex_set.hpp"

namespace alliance {

/// The four offensive-alliance predicate variants. All of them check the
/// margin inequality
///     |N_S(v)| >= |N_{V\S}(v)| + margin
/// with margin 1 (plain) or 2 (strong). Plain kinds quantify over the
/// boundary of S; global kinds quantify over all of V\S, which makes every
/// global alliance a dominating set. An equivalent per-vertex form is
///     2|N_S(v)| >= deg(v) + margin.
enum class AllianceKind {
    Offensive,
    StrongOffensive,
    GlobalOffensive,
    GlobalStrongOffensive,
};

constexpr int margin(AllianceKind k) {
    return (k == AllianceKind::StrongOffensive || k == AllianceKind::GlobalStrongOffensive) ? 2 : 1;
}

constexpr bool is_global(AllianceKind k) {
    return k == AllianceKind::GlobalOffensive || k == AllianceKind::GlobalStrongOffensive;
}

const char* to_string(AllianceKind k);
AllianceKind kind_from_string(const std::string& name);

struct Violator {
    int vertex;
    int inside;  // |N_S(v)|
    int outside; // |N_{V\S}(v)|
};

struct PredicateCertificate {
    AllianceKind kind;
    VertexSet set;
    bool satisfied;
    std::optional<Violator> violator; // smallest-index violating vertex
};

/// Boundary of s: vertices outside s with at least one neighbor inside.
VertexSet boundary(const Graph& g, const VertexSet& s);

/// Evaluates the defining inequality over the relevant vertex range and
/// reports the first violator in index order.
PredicateCertificate check_alliance(const Graph& g, const VertexSet& s, AllianceKind kind);

/// The degree form of the same predicate (2|N_S(v)| >= deg(v) + margin over
/// the identical vertex range). Kept as a second route for cross-checking.
bool satisfies_degree_form(const Graph& g, const VertexSet& s, AllianceKind kind);

/// True iff no proper nonempty subset of s satisfies the predicate. The
/// property is not hereditary, so all proper subsets are searched
/// (descending cardinality, early exit). Guarded at |s| <= 20. Requires
/// s itself to satisfy the predicate.
bool is_minimal_alliance(const Graph& g, const VertexSet& s, AllianceKind kind);

} // namespace alliance
