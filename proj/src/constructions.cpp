#include "alliance/constructions.hpp"

#include <stdexcept>

#include "alliance/errors.hpp"
#include "alliance/invariants.hpp"

namespace alliance {

WitnessReport independent_complement_alliance(const Graph& g, bool strong) {
    const int need = strong ? 2 : 1;
    if (g.min_degree() < need)
        throw hypothesis_error(std::string("independent_complement_alliance: requires minimum degree >= ") +
                               std::to_string(need) +
                               (strong ? " (stars and pendant vertices break the strong bound)" : ""));
    WitnessedValue alpha = independence_number(g);
    VertexSet w = alpha.witness.complement(); // nonempty: min degree >= 1 forces alpha < n
    AllianceKind kind = strong ? AllianceKind::GlobalStrongOffensive : AllianceKind::GlobalOffensive;
    return WitnessReport{"independent_complement", w, kind,
                         static_cast<long long>(g.order()) - alpha.value,
                         check_alliance(g, w, kind)};
}

WitnessReport maxcut_refined_alliance(const Graph& g, BaseSet base, bool strong) {
    if (strong != (base == BaseSet::TwoDominating))
        throw std::invalid_argument(strong
            ? "maxcut_refined_alliance: the strong variant needs the 2-dominating base"
            : "maxcut_refined_alliance: the 2-dominating base only serves the strong variant");

    WitnessedValue base_set{0, VertexSet(g.order())};
    switch (base) {
        case BaseSet::Independent: base_set = independence_number(g); break;
        case BaseSet::Dominating: base_set = k_domination_number(g, 1); break;
        case BaseSet::TwoDominating: base_set = k_domination_number(g, 2); break;
    }
    const long long n = g.order();
    const long long claimed = (n + base_set.value) / 2; // floor
    AllianceKind kind = strong ? AllianceKind::GlobalStrongOffensive : AllianceKind::GlobalOffensive;
    const char* name = base == BaseSet::TwoDominating ? "two_dom_refined" : "maxcut_refined";

    VertexSet rest = base_set.witness.complement();
    int rest_size = rest.size();
    VertexSet w(g.order());
    if (rest_size >= 2) {
        CutMode mode = rest_size <= 20 ? CutMode::Exact : CutMode::LocalSearch;
        CutPartition cut = max_cut_partition(rest, g, mode);
        w = base_set.witness | cut.x;
    } else if (rest_size == 1) {
        if (base == BaseSet::Independent) {
            // Only one vertex outside a maximum independent set: the graph is
            // a star with that vertex as center, provided no vertex is
            // isolated. The center alone is the alliance.
            if (g.min_degree() < 1)
                throw hypothesis_error("maxcut_refined_alliance: isolated vertex outside the star case");
            w = rest;
        } else {
            w = base_set.witness; // the n-1 base dominates the lone outsider
        }
    } else {
        // Base covers every vertex. For the dominating bases the whole
        // vertex set is a (vacuous) alliance matching the claimed bound;
        // the independent base reaching here means the graph has no edges.
        if (base == BaseSet::Independent)
            throw hypothesis_error("maxcut_refined_alliance: the graph has no edges");
        w = base_set.witness;
    }
    return WitnessReport{name, w, kind, claimed, check_alliance(g, w, kind)};
}

} // namespace alliance
