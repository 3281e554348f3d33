#include <doctest.h>

#include <random>

#include "alliance/errors.hpp"
#include "alliance/families.hpp"
#include "alliance/graph.hpp"

#include "oracles.hpp"

using namespace alliance;

TEST_CASE("degree basics") {
    auto km = families::cocktail_party(3); // K6 minus a perfect matching
    for (int v = 0; v < 6; ++v) CHECK(km.degree(v) == 4);

    auto k1 = Graph::from_edges(1, {});
    CHECK(k1.degree(0) == 0);

    auto pet = families::petersen();
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

    CHECK_THROWS_AS((void)pet.degree(10), std::invalid_argument);
    CHECK_THROWS_AS((void)pet.degree(-1), std::invalid_argument);
}

TEST_CASE("neighbors_in") {
    auto p3 = families::path(3);
    CHECK(p3.neighbors_in(1, VertexSet::of(3, {0, 2})) == VertexSet::of(3, {0, 2}));
    CHECK(p3.neighbors_in(1, VertexSet(3)).empty());

    auto c5 = families::cycle(5);
    CHECK(c5.neighbors_in(0, VertexSet::of(5, {1, 2})) == VertexSet::of(5, {1}));
}

TEST_CASE("neighborhood splits into inside and outside parts") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto g = families::random_gnp(n, 0.4, rng());
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() % 2) s.add(v);
        for (int v = 0; v < n; ++v) {
            auto inside = g.neighbors_in(v, s);
            auto outside = g.neighbors_in(v, s.complement());
            CHECK((inside & outside).empty());
            CHECK((inside | outside) == g.neighbors(v));
            CHECK(inside.size() + outside.size() == g.degree(v));
        }
    }
}

TEST_CASE("degree sum is twice the edge count on generated graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        auto g = families::random_gnp(n, 0.5, rng());
        long long total = 0;
        for (int v = 0; v < n; ++v) total += g.degree(v);
        CHECK(total == 2LL * g.size());
    }
}

TEST_CASE("induced subgraphs") {
    auto k4 = families::complete(4);
    auto sub = induced_subgraph(k4, VertexSet::of(4, {0, 2, 3}));
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.size() == 3); // K3
    CHECK(sub.vertex_map == std::vector<int>{0, 2, 3});

    auto c5 = families::cycle(5);
    auto p = induced_subgraph(c5, VertexSet::of(5, {1, 2, 3}));
    CHECK(p.graph.size() == 2); // path on three consecutive vertices
    CHECK(p.graph.degree(1) == 2);

    auto same = induced_subgraph(c5, c5.full_set());
    CHECK(same.graph.order() == 5);
    CHECK(same.graph.edges() == c5.edges());
    CHECK(same.vertex_map == std::vector<int>{0, 1, 2, 3, 4});

    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet(5)), std::invalid_argument);
}

TEST_CASE("connectivity") {
    CHECK(families::cycle(5).is_connected());
    CHECK(Graph::from_edges(1, {}).is_connected());
    CHECK_FALSE(Graph::from_edges(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("diameter") {
    CHECK(families::complete(2).diameter() == 1);
    CHECK(families::complete(7).diameter() == 1);
    CHECK(families::path(4).diameter() == 3);
    CHECK(families::petersen().diameter() == 2);
    CHECK_THROWS_AS((void)Graph::from_edges(4, {{0, 1}, {2, 3}}).diameter(), std::domain_error);
}

TEST_CASE("builder rejects invalid edges") {
    GraphBuilder b(3);
    b.add_edge(0, 1);
    CHECK_THROWS_AS(b.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(GraphBuilder(0), std::invalid_argument);
}

TEST_CASE("vertex set lexicographic order") {
    CHECK(VertexSet::lex_less(VertexSet::of(6, {0, 5}), VertexSet::of(6, {1, 2})));
    CHECK(VertexSet::lex_less(VertexSet::of(6, {1, 3}), VertexSet::of(6, {1, 4})));
    CHECK(VertexSet::lex_less(VertexSet::of(6, {1}), VertexSet::of(6, {1, 4})));
    CHECK_FALSE(VertexSet::lex_less(VertexSet::of(6, {2}), VertexSet::of(6, {2})));
}
