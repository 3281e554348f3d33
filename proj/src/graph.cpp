#include "alliance/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace alliance {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

int Graph::degree(int v) const {
    check_vertex(v);
    return deg_[static_cast<std::size_t>(v)];
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

VertexSet Graph::neighbors_in(int v, const VertexSet& s) const {
    check_vertex(v);
    if (s.universe() != n_)
        throw std::invalid_argument("Graph::neighbors_in: set universe mismatch");
    return adj_[static_cast<std::size_t>(v)] & s;
}

int Graph::neighbors_in_count(int v, const VertexSet& s) const {
    check_vertex(v);
    if (s.universe() != n_)
        throw std::invalid_argument("Graph::neighbors_in_count: set universe mismatch");
    return adj_[static_cast<std::size_t>(v)].intersection_size(s);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    VertexSet reached(n_);
    reached.add(0);
    std::queue<int> q;
    q.push(0);
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        adj_[static_cast<std::size_t>(v)].for_each([&](int u) {
            if (!reached.contains(u)) {
                reached.add(u);
                ++count;
                q.push(u);
            }
        });
    }
    return count == n_;
}

int Graph::diameter() const {
    if (!is_connected())
        throw std::domain_error("diameter: undefined on a disconnected graph");
    int diam = 0;
    std::vector<int> dist(static_cast<std::size_t>(n_));
    for (int s = 0; s < n_; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            adj_[static_cast<std::size_t>(v)].for_each([&](int u) {
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    diam = std::max(diam, dist[static_cast<std::size_t>(u)]);
                    q.push(u);
                }
            });
        }
    }
    return diam;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("GraphBuilder: order must be at least 1");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("add_edge: vertex out of range: (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
    if (u == v)
        throw std::invalid_argument("add_edge: self-loop at vertex " + std::to_string(u));
    if (adj_[static_cast<std::size_t>(u)].contains(v))
        throw std::invalid_argument("add_edge: duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
    ++m_;
    return *this;
}

bool GraphBuilder::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

Graph GraphBuilder::build() {
    Graph g;
    g.n_ = n_;
    g.m_ = m_;
    g.adj_ = std::move(adj_);
    g.deg_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) g.deg_[static_cast<std::size_t>(v)] = g.adj_[static_cast<std::size_t>(v)].size();
    g.min_deg_ = *std::min_element(g.deg_.begin(), g.deg_.end());
    g.max_deg_ = *std::max_element(g.deg_.begin(), g.deg_.end());
    adj_.clear();
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: set universe mismatch");
    if (s.empty())
        throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> map = s.vertices();
    std::vector<int> inverse(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < map.size(); ++i)
        inverse[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
    GraphBuilder b(static_cast<int>(map.size()));
    for (std::size_t i = 0; i < map.size(); ++i) {
        g.neighbors_in(map[i], s).for_each([&](int u) {
            int j = inverse[static_cast<std::size_t>(u)];
            if (static_cast<int>(i) < j) b.add_edge(static_cast<int>(i), j);
        });
    }
    return InducedSubgraph{b.build(), std::move(map)};
}

} // namespace alliance
