#pragma once

#include <utility>
#include <vector>

#include "alliance/vertex_set.hpp"

namespace alliance {

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is one
/// bitset row per vertex, so N_S(v) queries are intersection popcounts.
/// Instances are safe to share across threads; every operation is a pure read.
class Graph {
public:
    /// Default-constructed graphs are empty placeholders (order 0); real
    /// graphs come from GraphBuilder or from_edges, both of which enforce
    /// order >= 1.
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; } // number of edges

    int degree(int v) const;
    int min_degree() const noexcept { return min_deg_; }
    int max_degree() const noexcept { return max_deg_; }

    const VertexSet& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    /// N_S(v): the neighbors v has inside s.
    VertexSet neighbors_in(int v, const VertexSet& s) const;
    int neighbors_in_count(int v, const VertexSet& s) const;

    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool is_connected() const;

    /// Max shortest-path distance over all vertex pairs (BFS from every
    /// vertex). Throws std::domain_error on disconnected input.
    int diameter() const;

    VertexSet full_set() const { return VertexSet::full(n_); }

private:
    friend class GraphBuilder;

    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    int min_deg_ = 0;
    int max_deg_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<int> deg_;
};

/// All graph construction funnels through the builder; the built graph is
/// immutable afterwards.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int order() const noexcept { return n_; }

    Graph build();

private:
    int n_;
    std::vector<VertexSet> adj_;
    int m_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map; // new index -> original vertex id
};

/// Subgraph induced by s, relabelled densely. The map gives original ids.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

} // namespace alliance
