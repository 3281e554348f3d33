#include <doctest.h>

#include <random>

#include "alliance/constructions.hpp"
#include "alliance/errors.hpp"
#include "alliance/families.hpp"
#include "alliance/invariants.hpp"

using namespace alliance;

TEST_CASE("independent-set complement on the reference graphs") {
    auto km = families::cocktail_party(3);
    auto plain = independent_complement_alliance(km, false);
    CHECK(plain.set.size() == 4);
    CHECK(plain.size_bound_claimed == 4);
    CHECK(plain.certificate.satisfied);
    CHECK(plain.construction == "independent_complement");

    auto strong = independent_complement_alliance(km, true);
    CHECK(strong.set.size() == 4);
    CHECK(strong.certificate.satisfied);
    CHECK(strong.kind == AllianceKind::GlobalStrongOffensive);

    auto c5 = independent_complement_alliance(families::cycle(5), false);
    CHECK(c5.set.size() == 3); // alpha(C5) = 2, frozen from brute force
    CHECK(c5.certificate.satisfied);

    // the star breaks the strong hypothesis (pendant vertices)
    CHECK_THROWS_AS(independent_complement_alliance(families::star(6), true), hypothesis_error);
    // isolated vertices break even the plain construction
    CHECK_THROWS_AS(independent_complement_alliance(Graph::from_edges(3, {{0, 1}}), false),
                    hypothesis_error);
}

TEST_CASE("max-cut refinement on the reference graphs") {
    auto km = families::cocktail_party(3);
    auto w1 = maxcut_refined_alliance(km, BaseSet::Independent, false);
    CHECK(w1.certificate.satisfied);
    CHECK(w1.size_bound_claimed == 4); // floor((6+2)/2)
    CHECK(w1.set.size() <= 4);
    CHECK(w1.construction == "maxcut_refined");

    auto w2 = maxcut_refined_alliance(km, BaseSet::TwoDominating, true);
    CHECK(w2.certificate.satisfied);
    CHECK(w2.size_bound_claimed == 4); // floor((6+2)/2), gamma_2 = 2
    CHECK(w2.set.size() <= 4);
    CHECK(w2.construction == "two_dom_refined");
    CHECK(w2.kind == AllianceKind::GlobalStrongOffensive);

    auto w3 = maxcut_refined_alliance(km, BaseSet::Dominating, false);
    CHECK(w3.certificate.satisfied);
    CHECK(w3.size_bound_claimed == 4); // gamma = 2

    // star: only one vertex outside the maximum independent set
    auto star = maxcut_refined_alliance(families::star(6), BaseSet::Independent, false);
    CHECK(star.set == VertexSet::of(7, {0}));
    CHECK(star.certificate.satisfied);

    CHECK_THROWS_AS(maxcut_refined_alliance(km, BaseSet::Independent, true), std::invalid_argument);
    CHECK_THROWS_AS(maxcut_refined_alliance(km, BaseSet::Dominating, true), std::invalid_argument);
    CHECK_THROWS_AS(maxcut_refined_alliance(km, BaseSet::TwoDominating, false),
                    std::invalid_argument);
}

TEST_CASE("degenerate bases") {
    // no edges: dominating bases still return V, the independent base cannot
    auto empty = Graph::from_edges(4, {});
    auto byg = maxcut_refined_alliance(empty, BaseSet::Dominating, false);
    CHECK(byg.set == empty.full_set());
    CHECK(byg.certificate.satisfied);
    auto byg2 = maxcut_refined_alliance(empty, BaseSet::TwoDominating, true);
    CHECK(byg2.set == empty.full_set());
    CHECK(byg2.certificate.satisfied);
    CHECK_THROWS_AS(maxcut_refined_alliance(empty, BaseSet::Independent, false), hypothesis_error);

    // K2: the 2-dominating base is all of V
    auto k2 = families::complete(2);
    auto w = maxcut_refined_alliance(k2, BaseSet::TwoDominating, true);
    CHECK(w.set == k2.full_set());
    CHECK(w.certificate.satisfied);
    CHECK(w.set.size() <= w.size_bound_claimed);
}

TEST_CASE("constructions hold on random graphs, with the structural step") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 10);
        auto g = families::random_gnp(n, 0.2 + 0.2 * static_cast<double>(trial % 4), rng());

        if (g.min_degree() >= 1) {
            auto r = independent_complement_alliance(g, false);
            CHECK(r.certificate.satisfied);
            CHECK(static_cast<long long>(r.set.size()) <= r.size_bound_claimed);
        }
        if (g.min_degree() >= 2) {
            auto r = independent_complement_alliance(g, true);
            CHECK(r.certificate.satisfied);
            CHECK(static_cast<long long>(r.set.size()) <= r.size_bound_claimed);
        }

        struct Mode {
            BaseSet base;
            bool strong;
            int base_margin;
        };
        for (auto mode : {Mode{BaseSet::Independent, false, 1}, Mode{BaseSet::Dominating, false, 1},
                          Mode{BaseSet::TwoDominating, true, 2}}) {
            WitnessReport r = [&] {
                try {
                    return maxcut_refined_alliance(g, mode.base, mode.strong);
                } catch (const hypothesis_error&) {
                    REQUIRE(mode.base == BaseSet::Independent);
                    REQUIRE((g.size() == 0 || g.min_degree() == 0));
                    return WitnessReport{"skipped", VertexSet(n), AllianceKind::Offensive, 0,
                                         PredicateCertificate{AllianceKind::Offensive, VertexSet(n),
                                                              false, std::nullopt}};
                }
            }();
            if (r.construction == "skipped") continue;
            CHECK(r.certificate.satisfied);
            CHECK(static_cast<long long>(r.set.size()) <= r.size_bound_claimed);
            CHECK_FALSE(r.set.empty());
            CHECK(r.set.size() <= n);

            // the construction's key step on the non-degenerate path: recompute the
            // base set, derive X and Y, and check the cut property plus the
            // base margin directly
            VertexSet base_set = mode.base == BaseSet::Independent
                                     ? independence_number(g).witness
                                     : k_domination_number(g, mode.base_margin).witness;
            if (base_set.complement().size() < 2) continue;
            VertexSet x = r.set - base_set;
            VertexSet y = r.set.complement();
            y.for_each([&](int v) {
                CHECK(g.neighbors_in_count(v, x) >= g.neighbors_in_count(v, y));
                CHECK(g.neighbors_in_count(v, base_set) >= mode.base_margin);
            });
        }
    }
}
