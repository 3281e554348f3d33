#include "alliance/invariants.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "alliance/errors.hpp"

namespace alliance {

namespace {

using std::uint64_t;

uint64_t bit(int v) { return uint64_t{1} << v; }

std::vector<uint64_t> neighbor_masks(const Graph& g) {
    if (g.order() > 64)
        throw capacity_error("exact search supports at most 64 vertices");
    std::vector<uint64_t> nbr(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) nbr[static_cast<std::size_t>(v)] = g.neighbors(v).mask();
    return nbr;
}

void mis_rec(uint64_t pool, int current, int& best, const std::vector<uint64_t>& nbr) {
    if (current + std::popcount(pool) <= best) return;
    if (!pool) {
        best = std::max(best, current);
        return;
    }
    int v = std::countr_zero(pool);
    mis_rec(pool & ~(nbr[static_cast<std::size_t>(v)] | bit(v)), current + 1, best, nbr);
    mis_rec(pool & ~bit(v), current, best, nbr);
}

int mis_size(uint64_t pool, const std::vector<uint64_t>& nbr) {
    int best = 0;
    mis_rec(pool, 0, best, nbr);
    return best;
}

// Lexicographic combination scan: visits the k-subsets of 0..n-1 in
// lexicographic order of their sorted member sequences and stops when the
// visitor returns true.
template <typename F>
bool scan_combinations_lex(int n, int k, F visit) {
    if (k < 0 || k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

uint64_t mask_of(const std::vector<int>& idx) {
    uint64_t m = 0;
    for (int v : idx) m |= bit(v);
    return m;
}

bool is_k_dominating_mask(const std::vector<uint64_t>& nbr, int n, uint64_t s, int k) {
    for (int v = 0; v < n; ++v) {
        if (s & bit(v)) continue;
        if (std::popcount(nbr[static_cast<std::size_t>(v)] & s) < k) return false;
    }
    return true;
}

bool mask_connected(const std::vector<uint64_t>& nbr, uint64_t s) {
    if (!s) return false;
    uint64_t reach = s & (~s + 1); // lowest member
    while (true) {
        uint64_t grow = reach;
        uint64_t frontier = reach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grow |= nbr[static_cast<std::size_t>(v)] & s;
        }
        if (grow == reach) break;
        reach = grow;
    }
    return reach == s;
}

long long ceil_div_ll(long long a, long long b) { return (a + b - 1) / b; }

} // namespace

WitnessedValue independence_number(const Graph& g) {
    auto nbr = neighbor_masks(g);
    int n = g.order();
    uint64_t all = (n == 64) ? ~uint64_t{0} : (bit(n) - 1);
    int alpha = mis_size(all, nbr);

    // Canonical witness: greedily take the smallest vertex that still allows
    // completing a maximum independent set among strictly larger vertices.
    uint64_t chosen = 0;
    uint64_t pool = all;
    int need = alpha;
    while (need > 0) {
        uint64_t candidates = pool;
        while (candidates) {
            int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            uint64_t above = (v == 63) ? 0 : ~(bit(v + 1) - 1);
            uint64_t rest = pool & above & ~nbr[static_cast<std::size_t>(v)];
            if (1 + mis_size(rest, nbr) >= need) {
                chosen |= bit(v);
                pool = rest;
                --need;
                break;
            }
        }
    }
    return WitnessedValue{alpha, VertexSet::from_mask(n, chosen)};
}

WitnessedValue k_domination_number(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k_domination_number: k >= 1 required");
    auto nbr = neighbor_masks(g);
    int n = g.order();
    int start = static_cast<int>(std::max<long long>(
        1, ceil_div_ll(static_cast<long long>(k) * n, g.max_degree() + k)));
    for (int size = start; size <= n; ++size) {
        uint64_t found = 0;
        bool ok = scan_combinations_lex(n, size, [&](const std::vector<int>& idx) {
            uint64_t s = mask_of(idx);
            if (is_k_dominating_mask(nbr, n, s, k)) {
                found = s;
                return true;
            }
            return false;
        });
        if (ok) return WitnessedValue{size, VertexSet::from_mask(n, found)};
    }
    // V itself is vacuously k-dominating, so the loop always returns.
    throw std::logic_error("k_domination_number: unreachable");
}

WitnessedValue connected_domination_number(const Graph& g) {
    if (g.order() < 2)
        throw std::invalid_argument("connected_domination_number: order >= 2 required");
    if (!g.is_connected())
        throw std::domain_error("connected_domination_number: graph must be connected");
    auto nbr = neighbor_masks(g);
    int n = g.order();
    for (int size = 1; size <= n; ++size) {
        uint64_t found = 0;
        bool ok = scan_combinations_lex(n, size, [&](const std::vector<int>& idx) {
            uint64_t s = mask_of(idx);
            if (is_k_dominating_mask(nbr, n, s, 1) && mask_connected(nbr, s)) {
                found = s;
                return true;
            }
            return false;
        });
        if (ok) return WitnessedValue{size, VertexSet::from_mask(n, found)};
    }
    throw std::logic_error("connected_domination_number: unreachable");
}

namespace {

struct CutCandidate {
    uint64_t x; // compressed to positions within the subset
    uint64_t y;
    long long cut;
};

// Canonicalize so x is the smaller side; equal sizes break toward the side
// holding the smallest position.
void canonicalize(CutCandidate& c) {
    int px = std::popcount(c.x), py = std::popcount(c.y);
    bool swap = px > py;
    if (px == py && c.x && c.y) {
        uint64_t d = c.x ^ c.y;
        uint64_t low = d & (~d + 1);
        swap = !(c.x & low);
    }
    if (swap) std::swap(c.x, c.y);
}

// true when a is lexicographically smaller than b as a vertex set
// (positions map monotonically to vertex ids).
bool lex_less_mask(uint64_t a, uint64_t b) {
    uint64_t d = a ^ b;
    if (!d) return false;
    uint64_t low = d & (~d + 1);
    return (a & low) != 0;
}

} // namespace

CutPartition max_cut_partition(const VertexSet& sub, const Graph& g, CutMode mode) {
    if (sub.universe() != g.order())
        throw std::invalid_argument("max_cut_partition: set universe mismatch");
    std::vector<int> elems = sub.vertices();
    int p = static_cast<int>(elems.size());
    if (p < 2)
        throw std::invalid_argument("max_cut_partition: need at least 2 vertices");

    // Adjacency restricted to the subset, compressed to positions 0..p-1.
    std::vector<uint64_t> adj(static_cast<std::size_t>(p), 0);
    if (p > 64) {
        throw capacity_error(mode == CutMode::Exact
                                 ? "max_cut_partition: exact mode supports at most 20 vertices"
                                 : "max_cut_partition: subsets beyond 64 vertices unsupported");
    } else {
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (i != j && g.has_edge(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]))
                    adj[static_cast<std::size_t>(i)] |= bit(j);
    }

    CutCandidate best{0, 0, -1};
    if (mode == CutMode::Exact) {
        if (p > 20)
            throw capacity_error("max_cut_partition: exact mode supports at most 20 vertices");
        uint64_t all = bit(p) - 1;
        // Position 0 pinned to side y; masks range over the rest.
        for (uint64_t m = 0; m < bit(p - 1); ++m) {
            uint64_t x = m << 1;
            uint64_t y = all & ~x;
            long long cut = 0;
            for (int i = 0; i < p; ++i)
                if (x & bit(i)) cut += std::popcount(adj[static_cast<std::size_t>(i)] & y);
            CutCandidate c{x, y, cut};
            canonicalize(c);
            if (c.cut > best.cut ||
                (c.cut == best.cut && (lex_less_mask(c.x, best.x) ||
                                       (c.x == best.x && lex_less_mask(c.y, best.y)))))
                best = c;
        }
    } else {
        // Parity seed, then first-improvement single-vertex moves.
        uint64_t x = 0;
        for (int i = 0; i < p; ++i)
            if (elems[static_cast<std::size_t>(i)] % 2 == 0) x |= bit(i);
        uint64_t all = bit(p) - 1;
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i < p; ++i) {
                uint64_t y = all & ~x;
                bool in_x = (x & bit(i)) != 0;
                uint64_t own = in_x ? x : y;
                uint64_t other = in_x ? y : x;
                int same = std::popcount(adj[static_cast<std::size_t>(i)] & own);
                int cross = std::popcount(adj[static_cast<std::size_t>(i)] & other);
                if (same > cross) {
                    x ^= bit(i);
                    moved = true;
                }
            }
        }
        long long cut = 0;
        uint64_t y = all & ~x;
        for (int i = 0; i < p; ++i)
            if (x & bit(i)) cut += std::popcount(adj[static_cast<std::size_t>(i)] & y);
        best = CutCandidate{x, y, cut};
        canonicalize(best);
    }

    CutPartition out{VertexSet(g.order()), VertexSet(g.order()), best.cut};
    for (int i = 0; i < p; ++i) {
        if (best.x & bit(i)) out.x.add(elems[static_cast<std::size_t>(i)]);
        if (best.y & bit(i)) out.y.add(elems[static_cast<std::size_t>(i)]);
    }
    return out;
}

SpectralResult laplacian_spectral_radius(const Graph& g) {
    int n = g.order();
    if (g.size() == 0) return SpectralResult{0.0, 0.0};

    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) {
        lap(v, v) = g.degree(v);
        g.neighbors(v).for_each([&](int u) { lap(v, u) = -1.0; });
    }

    double mu = 0.0;
    Eigen::VectorXd w;
    if (n <= 64) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
        mu = solver.eigenvalues()(n - 1);
        w = solver.eigenvectors().col(n - 1);
    } else {
        // Power iteration; L is positive semidefinite, so its largest
        // eigenvalue dominates in absolute value without any shift.
        w = Eigen::VectorXd(n);
        for (int v = 0; v < n; ++v) w(v) = g.degree(v);
        w(0) += 1.0; // avoid starting orthogonal to the principal direction
        w.normalize();
        for (int it = 0; it < 200000; ++it) {
            Eigen::VectorXd z = lap * w;
            mu = w.dot(z);
            double residual = (z - mu * w).norm();
            if (residual <= 1e-10) break;
            double zn = z.norm();
            if (zn == 0.0) break;
            w = z / zn;
        }
    }
    if (mu < 0.0) mu = 0.0;
    double residual = (lap * w - mu * w).norm() / w.norm();
    double tolerance = residual + 1e-12 * (1.0 + mu);
    return SpectralResult{mu, tolerance};
}

} // namespace alliance
