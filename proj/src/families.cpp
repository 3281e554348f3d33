#include "alliance/families.hpp"

#include <random>
#include <stdexcept>

namespace alliance::families {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Deterministic uniform double in [0,1) from the raw engine output.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

} // namespace

Graph complete(int n) {
    require(n >= 1, "complete: n >= 1 required");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) b.add_edge(u, v);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    return complete_multipartite({a, b});
}

Graph complete_multipartite(const std::vector<int>& parts) {
    require(!parts.empty(), "complete_multipartite: at least one part");
    int n = 0;
    for (int p : parts) {
        require(p >= 1, "complete_multipartite: part sizes must be positive");
        n += p;
    }
    GraphBuilder bld(n);
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[static_cast<std::size_t>(v++)] = static_cast<int>(i);
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x)
            if (part_of[static_cast<std::size_t>(x)] != part_of[static_cast<std::size_t>(y)]) bld.add_edge(x, y);
    return bld.build();
}

Graph cocktail_party(int k) {
    require(k >= 1, "cocktail_party: k >= 1 required");
    int n = 2 * k;
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (!(u / 2 == v / 2)) b.add_edge(u, v); // skip the matching (2i, 2i+1)
    return b.build();
}

Graph star(int leaves) {
    require(leaves >= 1, "star: at least one leaf");
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph path(int n) {
    require(n >= 1, "path: n >= 1 required");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
    return b.build();
}

Graph cycle(int n) {
    require(n >= 3, "cycle: n >= 3 required");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add_edge(v - 1, v);
    b.add_edge(n - 1, 0);
    return b.build();
}

Graph hypercube(int dim) {
    require(dim >= 1 && dim <= 20, "hypercube: dimension in [1,20]");
    int n = 1 << dim;
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < dim; ++bit) {
            int u = v ^ (1 << bit);
            if (v < u) b.add_edge(v, u);
        }
    return b.build();
}

Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);          // outer cycle
        b.add_edge(i, i + 5);                // spokes
        b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return b.build();
}

Graph prism() {
    GraphBuilder b(6);
    for (int i = 0; i < 3; ++i) {
        b.add_edge(i, (i + 1) % 3);
        b.add_edge(3 + i, 3 + (i + 1) % 3);
        b.add_edge(i, i + 3);
    }
    return b.build();
}

Graph join_complete_with_empty(int r, int t) {
    require(r >= 1, "join_complete_with_empty: r >= 1 required");
    require(t >= 1, "join_complete_with_empty: t >= 1 required");
    GraphBuilder b(r + t);
    for (int v = 1; v < r; ++v)
        for (int u = 0; u < v; ++u) b.add_edge(u, v);
    for (int u = 0; u < r; ++u)
        for (int w = r; w < r + t; ++w) b.add_edge(u, w);
    return b.build();
}

Graph named(const std::string& family, const std::vector<long long>& params) {
    auto want = [&](std::size_t k) {
        require(params.size() == k,
                "family '" + family + "' expects " + std::to_string(k) + " parameter(s)");
    };
    auto p = [&](std::size_t i) { return static_cast<int>(params[i]); };
    if (family == "complete") { want(1); return complete(p(0)); }
    if (family == "complete_bipartite") { want(2); return complete_bipartite(p(0), p(1)); }
    if (family == "complete_multipartite") {
        require(!params.empty(), "complete_multipartite expects part sizes");
        std::vector<int> parts;
        for (auto x : params) parts.push_back(static_cast<int>(x));
        return complete_multipartite(parts);
    }
    if (family == "cocktail_party") { want(1); return cocktail_party(p(0)); }
    if (family == "star") { want(1); return star(p(0)); }
    if (family == "path") { want(1); return path(p(0)); }
    if (family == "cycle") { want(1); return cycle(p(0)); }
    if (family == "hypercube") { want(1); return hypercube(p(0)); }
    if (family == "petersen") { want(0); return petersen(); }
    if (family == "prism") { want(0); return prism(); }
    if (family == "join_complete_with_empty") { want(2); return join_complete_with_empty(p(0), p(1)); }
    throw std::invalid_argument("unknown graph family '" + family + "'");
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    require(n >= 1, "random_gnp: n >= 1 required");
    require(p >= 0.0 && p <= 1.0, "random_gnp: p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (unit_draw(rng) < p) b.add_edge(u, v);
    return b.build();
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    require(n >= 1 && d >= 0, "random_regular: n >= 1, d >= 0 required");
    require(d < n, "random_regular: d < n required");
    require((static_cast<long long>(n) * d) % 2 == 0, "random_regular: n*d must be even");
    if (d == 0) return GraphBuilder(n).build();
    std::mt19937_64 rng(seed);
    const int max_attempts = 2000;
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        // Fisher-Yates with raw draws, so results do not depend on the
        // standard library's shuffle implementation.
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
            std::swap(stubs[i], stubs[j]);
        }
        GraphBuilder b(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || b.has_edge(u, v)) {
                ok = false;
                break;
            }
            b.add_edge(u, v);
        }
        if (ok) return b.build();
    }
    throw std::runtime_error("random_regular: no simple pairing found within retry budget");
}

int labeled_code_bits(int n) {
    require(n >= 1, "labeled_code_bits: n >= 1 required");
    return n * (n - 1) / 2;
}

Graph labeled_graph(int n, std::uint64_t code) {
    int bits = labeled_code_bits(n);
    require(bits <= 62, "labeled_graph: order too large for a 64-bit code");
    require(code < (std::uint64_t{1} << bits), "labeled_graph: code out of range");
    GraphBuilder b(n);
    int k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if ((code >> k) & 1u) b.add_edge(u, v);
    return b.build();
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& fn) {
    require(n >= 1 && n <= 6, "for_each_labeled_graph: supported for n <= 6");
    std::uint64_t total = std::uint64_t{1} << labeled_code_bits(n);
    for (std::uint64_t code = 0; code < total; ++code) fn(labeled_graph(n, code), code);
}

} // namespace alliance::families
