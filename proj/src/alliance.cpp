#include "alliance/alliance.hpp"

#include <stdexcept>
#include <vector>

#include "alliance/errors.hpp"

namespace alliance {

const char* to_string(AllianceKind k) {
    switch (k) {
        case AllianceKind::Offensive: return "offensive";
        case AllianceKind::StrongOffensive: return "strong_offensive";
        case AllianceKind::GlobalOffensive: return "global_offensive";
        case AllianceKind::GlobalStrongOffensive: return "global_strong_offensive";
    }
    return "?";
}

AllianceKind kind_from_string(const std::string& name) {
    if (name == "offensive") return AllianceKind::Offensive;
    if (name == "strong_offensive") return AllianceKind::StrongOffensive;
    if (name == "global_offensive") return AllianceKind::GlobalOffensive;
    if (name == "global_strong_offensive") return AllianceKind::GlobalStrongOffensive;
    throw std::invalid_argument("unknown alliance kind '" + name + "'");
}

VertexSet boundary(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("boundary: set universe mismatch");
    if (s.empty())
        throw std::invalid_argument("boundary: empty set");
    VertexSet out(g.order());
    s.for_each([&](int v) { out |= g.neighbors(v); });
    out -= s;
    return out;
}

PredicateCertificate check_alliance(const Graph& g, const VertexSet& s, AllianceKind kind) {
    if (s.universe() != g.order())
        throw std::invalid_argument("check_alliance: set universe mismatch");
    if (s.empty())
        throw std::invalid_argument("check_alliance: empty set");
    VertexSet range = is_global(kind) ? s.complement() : boundary(g, s);
    const int need = margin(kind);
    PredicateCertificate cert{kind, s, true, std::nullopt};
    std::vector<int> order = range.vertices(); // ascending
    for (int v : order) {
        int inside = g.neighbors_in_count(v, s);
        int outside = g.degree(v) - inside;
        if (inside - outside < need) {
            cert.satisfied = false;
            cert.violator = Violator{v, inside, outside};
            break;
        }
    }
    return cert;
}

bool satisfies_degree_form(const Graph& g, const VertexSet& s, AllianceKind kind) {
    if (s.universe() != g.order())
        throw std::invalid_argument("satisfies_degree_form: set universe mismatch");
    if (s.empty())
        throw std::invalid_argument("satisfies_degree_form: empty set");
    VertexSet range = is_global(kind) ? s.complement() : boundary(g, s);
    const int need = margin(kind);
    bool ok = true;
    range.for_each([&](int v) {
        if (2 * g.neighbors_in_count(v, s) < g.degree(v) + need) ok = false;
    });
    return ok;
}

namespace {

bool satisfies(const Graph& g, const VertexSet& s, AllianceKind kind) {
    VertexSet range = is_global(kind) ? s.complement() : boundary(g, s);
    const int need = margin(kind);
    bool ok = true;
    range.for_each([&](int v) {
        if (!ok) return;
        int inside = g.neighbors_in_count(v, s);
        if (inside - (g.degree(v) - inside) < need) ok = false;
    });
    return ok;
}

template <typename F>
bool scan_subsets_of_size(const std::vector<int>& members, int r, F visit) {
    int p = static_cast<int>(members.size());
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (visit(idx)) return true;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - r + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

bool is_minimal_alliance(const Graph& g, const VertexSet& s, AllianceKind kind) {
    auto cert = check_alliance(g, s, kind);
    if (!cert.satisfied)
        throw std::invalid_argument("is_minimal_alliance: the set is not an alliance of that kind");
    int p = s.size();
    if (p > 20)
        throw capacity_error("is_minimal_alliance: exact subset search restricted to |s| <= 20");
    std::vector<int> members = s.vertices();
    // Single-removal subsets usually certify non-minimality quickly; when
    // they all fail the search must continue all the way down because the
    // predicate is not hereditary.
    for (int r = p - 1; r >= 1; --r) {
        bool hit = scan_subsets_of_size(members, r, [&](const std::vector<int>& idx) {
            VertexSet t(g.order());
            for (int i : idx) t.add(members[static_cast<std::size_t>(i)]);
            return satisfies(g, t, kind);
        });
        if (hit) return false;
    }
    return true;
}

} // namespace alliance
