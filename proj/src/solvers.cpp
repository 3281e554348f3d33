#include "alliance/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "alliance/bounds.hpp"
#include "alliance/errors.hpp"
#include "alliance/invariants.hpp"

namespace alliance {

namespace {

using std::uint64_t;

uint64_t bit(int v) { return uint64_t{1} << v; }

int env_cap(const char* name, int fallback) {
    const char* raw = std::getenv(name);
    if (!raw) return fallback;
    char* end = nullptr;
    long val = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || val < 1 || val > 60) return fallback;
    return static_cast<int>(val);
}

struct MaskGraph {
    int n;
    std::vector<uint64_t> nbr;
    std::vector<int> deg;
    uint64_t all;
};

MaskGraph mask_graph(const Graph& g) {
    if (g.order() > 60)
        throw capacity_error("exact alliance search supports at most 60 vertices");
    MaskGraph mg;
    mg.n = g.order();
    mg.nbr.resize(static_cast<std::size_t>(mg.n));
    mg.deg.resize(static_cast<std::size_t>(mg.n));
    for (int v = 0; v < mg.n; ++v) {
        mg.nbr[static_cast<std::size_t>(v)] = g.neighbors(v).mask();
        mg.deg[static_cast<std::size_t>(v)] = g.degree(v);
    }
    mg.all = (mg.n == 64) ? ~uint64_t{0} : bit(mg.n) - 1;
    return mg;
}

bool alliance_mask(const MaskGraph& mg, uint64_t s, AllianceKind kind) {
    const int need = margin(kind);
    const bool global = is_global(kind);
    uint64_t outside = mg.all & ~s;
    while (outside) {
        int v = std::countr_zero(outside);
        outside &= outside - 1;
        int inside = std::popcount(mg.nbr[static_cast<std::size_t>(v)] & s);
        if (!global && inside == 0) continue; // not on the boundary
        if (inside - (mg.deg[static_cast<std::size_t>(v)] - inside) < need) return false;
    }
    return true;
}

bool mask_connected(const MaskGraph& mg, uint64_t s) {
    if (!s) return false;
    uint64_t reach = s & (~s + 1);
    while (true) {
        uint64_t grow = reach;
        uint64_t frontier = reach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grow |= mg.nbr[static_cast<std::size_t>(v)] & s;
        }
        if (grow == reach) break;
        reach = grow;
    }
    return reach == s;
}

// Colex (numeric / Gosper) scan over k-subsets of 0..n-1.
template <typename F>
bool scan_masks_colex(int n, int k, F visit) {
    if (k <= 0 || k > n) return false;
    uint64_t c = bit(k) - 1;
    uint64_t limit = (n == 64) ? ~uint64_t{0} : bit(n) - 1;
    while (true) {
        if (visit(c)) return true;
        if (k == n) return false;
        uint64_t t = c | (c - 1);
        uint64_t next = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(c) + 1));
        if (next > limit) return false;
        c = next;
    }
}

// Lexicographic (sorted member sequence) scan over k-subsets.
template <typename F>
bool scan_masks_lex(int n, int k, F visit) {
    if (k <= 0 || k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        uint64_t m = 0;
        for (int v : idx) m |= bit(v);
        if (visit(m)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

int lower_bound_seed(const Graph& g, AllianceKind kind, bool connected_variant) {
    if (!is_global(kind)) return 1;
    const bool strong = margin(kind) == 2;
    long long n = g.order(), m = g.size();
    long long dmin = g.min_degree(), dmax = g.max_degree();
    long long best = 1;
    // k-domination necessity of every global (strong) offensive alliance.
    long long k = (dmin + margin(kind) + 1) / 2; // ceil((dmin+margin)/2)
    best = std::max(best, formulas::k_domination_lower(k, n, dmax));
    best = std::max(best, strong ? formulas::L4_value(n, m) : formulas::L3_value(n, m));
    best = std::max(best, strong ? formulas::L6_value(n, m, dmax) : formulas::L5_value(n, m, dmax));
    if (m >= 1) {
        SpectralResult sr = laplacian_spectral_radius(g);
        double mu_high = sr.mu + sr.tolerance;
        best = std::max(best, strong ? formulas::L8_value(n, dmin, mu_high)
                                     : formulas::L7_value(n, dmin, mu_high));
    }
    bool connected = g.is_connected();
    if (connected && n >= 2)
        best = std::max(best, strong ? formulas::L2_value(n, dmin, dmax)
                                     : formulas::L1_value(n, dmin, dmax));
    if (connected_variant && connected) {
        long long diam = g.diameter();
        best = std::max(best, strong ? formulas::C5_value(n, m, diam, dmax)
                                     : formulas::C4_value(n, m, diam, dmax));
    }
    return static_cast<int>(std::min<long long>(best, n));
}

SolveResult solve_min(const Graph& g, AllianceKind kind, bool require_connected,
                      const SolveOptions& opts) {
    int cap = opts.exact_cap.value_or(default_exact_cap());
    if (g.order() > cap)
        throw capacity_error("exact alliance search capped at order " + std::to_string(cap) +
                             " (graph has " + std::to_string(g.order()) +
                             "); raise ALLIANCE_EXACT_CAP or use the constructions");
    MaskGraph mg = mask_graph(g);
    int start = 1;
    if (opts.seed_from_bounds) start = std::max(start, lower_bound_seed(g, kind, require_connected));

    long long nodes = 0;
    for (int k = start; k <= mg.n; ++k) {
        bool exists = scan_masks_colex(mg.n, k, [&](uint64_t s) {
            ++nodes;
            if (!alliance_mask(mg, s, kind)) return false;
            if (require_connected && !mask_connected(mg, s)) return false;
            return true;
        });
        if (!exists) continue;
        uint64_t witness = 0;
        scan_masks_lex(mg.n, k, [&](uint64_t s) {
            ++nodes;
            if (!alliance_mask(mg, s, kind)) return false;
            if (require_connected && !mask_connected(mg, s)) return false;
            witness = s;
            return true;
        });
        return SolveResult{kind,
                           require_connected ? Connectedness::AllianceConnected : Connectedness::None,
                           k, VertexSet::from_mask(mg.n, witness), nodes};
    }
    // V itself satisfies every kind (vacuously), and induces g which is
    // connected whenever the connected variant is allowed to run.
    throw std::logic_error("solve_min: unreachable");
}

} // namespace

int default_exact_cap() { return env_cap("ALLIANCE_EXACT_CAP", 24); }
int default_enum_cap() { return env_cap("ALLIANCE_ENUM_CAP", 16); }

SolveResult min_alliance(const Graph& g, AllianceKind kind, const SolveOptions& opts) {
    return solve_min(g, kind, false, opts);
}

SolveResult min_connected_alliance(const Graph& g, AllianceKind kind, const SolveOptions& opts) {
    if (!is_global(kind))
        throw std::invalid_argument("min_connected_alliance: kind must be global");
    if (!g.is_connected())
        throw std::domain_error("min_connected_alliance: graph must be connected");
    return solve_min(g, kind, true, opts);
}

std::vector<VertexSet> enumerate_minimal_global_alliances(const Graph& g, AllianceKind kind,
                                                          bool require_connected_complement,
                                                          const EnumerateOptions& opts) {
    int cap = opts.enum_cap.value_or(default_enum_cap());
    if (g.order() > cap)
        throw capacity_error("minimal-alliance enumeration capped at order " + std::to_string(cap) +
                             " (graph has " + std::to_string(g.order()) +
                             "); raise ALLIANCE_ENUM_CAP at your own risk");
    if (g.order() > 25)
        throw capacity_error("minimal-alliance enumeration needs order <= 25");
    MaskGraph mg = mask_graph(g);
    uint64_t total = bit(mg.n);

    // sat[s]: s is an alliance. has_sub[s]: some nonempty subset of s is.
    std::vector<std::uint8_t> sat(total, 0), has_sub(total, 0);
    for (uint64_t s = 1; s < total; ++s)
        sat[s] = alliance_mask(mg, s, kind) ? 1 : 0;
    for (uint64_t s = 1; s < total; ++s) {
        if (sat[s]) {
            has_sub[s] = 1;
            continue;
        }
        uint64_t rest = s;
        while (rest) {
            uint64_t b = rest & (~rest + 1);
            rest &= rest - 1;
            if (has_sub[s & ~b]) {
                has_sub[s] = 1;
                break;
            }
        }
    }

    std::vector<VertexSet> out;
    std::vector<uint64_t> minimal;
    for (uint64_t s = 1; s < total; ++s) {
        if (!sat[s]) continue;
        bool is_minimal = true;
        uint64_t rest = s;
        while (rest) {
            uint64_t b = rest & (~rest + 1);
            rest &= rest - 1;
            if (has_sub[s & ~b]) {
                is_minimal = false;
                break;
            }
        }
        if (!is_minimal) continue;
        if (require_connected_complement) {
            uint64_t comp = mg.all & ~s;
            if (!comp || !mask_connected(mg, comp)) continue;
        }
        minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(), [&](uint64_t a, uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        uint64_t d = a ^ b;
        if (!d) return false;
        uint64_t low = d & (~d + 1);
        return (a & low) != 0;
    });
    if (minimal.size() > opts.limit) minimal.resize(opts.limit);
    out.reserve(minimal.size());
    for (uint64_t s : minimal) out.push_back(VertexSet::from_mask(mg.n, s));
    return out;
}

} // namespace alliance
