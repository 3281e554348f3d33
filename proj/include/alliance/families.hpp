#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance::families {

// Deterministic constructors. Vertex numbering conventions:
//   complete(n)                    vertices 0..n-1
//   complete_bipartite(a, b)       side A = 0..a-1, side B = a..a+b-1
//   complete_multipartite(parts)   parts laid out consecutively
//   cocktail_party(k)              K_{2k} minus the matching {(2i, 2i+1)}
//   star(r)                        center 0, leaves 1..r
//   path(n)                        0-1-...-(n-1)
//   cycle(n)                       0-1-...-(n-1)-0, n >= 3
//   hypercube(d)                   vertices are d-bit codes, edges flip one bit
//   petersen()                     outer cycle 0..4, inner 5..9, spokes i-(i+5)
//   prism()                        triangles {0,1,2}, {3,4,5}, matching i-(i+3)
//   join_complete_with_empty(r,t)  K_r on 0..r-1 joined to t isolated vertices

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph cocktail_party(int k);
Graph star(int leaves);
Graph path(int n);
Graph cycle(int n);
Graph hypercube(int dim);
Graph petersen();
Graph prism();
Graph join_complete_with_empty(int r, int t);

/// CLI entry point: builds a named family from integer parameters.
/// Family names and parameter order are a stable interface.
Graph named(const std::string& family, const std::vector<long long>& params);

/// G(n,p) with a fixed pair scan order; identical seed gives an identical
/// graph on every platform (the generator never uses std:: distributions).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Random d-regular graph via the pairing model with rejection. Requires
/// n*d even and d < n. Throws std::runtime_error when the retry budget is
/// exhausted (only plausible for dense near-complete specs).
Graph random_regular(int n, int d, std::uint64_t seed);

/// Number of vertex pairs, i.e. bits in a labeled-graph edge code.
int labeled_code_bits(int n);

/// Graph on n vertices from an edge code: bit k = v*(v-1)/2 + u is the edge
/// (u,v) for u < v. Codes are a stable convention used by fixtures.
Graph labeled_graph(int n, std::uint64_t code);

/// Enumerates all 2^C(n,2) labeled graphs on n vertices (guarded n <= 6).
void for_each_labeled_graph(int n, const std::function<void(const Graph&, std::uint64_t)>& fn);

} // namespace alliance::families
