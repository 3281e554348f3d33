#include <doctest.h>

#include "alliance/errors.hpp"
#include "alliance/families.hpp"
#include "alliance/io.hpp"

using namespace alliance;

TEST_CASE("edge list parsing") {
    auto p3 = parse_edge_list("0 1\n1 2\n");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);

    auto with_header = parse_edge_list("n 4\n0 1\n");
    CHECK(with_header.order() == 4);
    CHECK(with_header.size() == 1);
    CHECK(with_header.degree(2) == 0);

    auto commented = parse_edge_list("# a path\n0 1\n\n# more\n1 2\n");
    CHECK(commented.order() == 3);

    CHECK_THROWS_AS(parse_edge_list("0 0\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("0 1\n1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), parse_error);
    CHECK_THROWS_AS(parse_edge_list(""), parse_error);
    CHECK_THROWS_AS(parse_edge_list("# only comments\n"), parse_error);

    // line numbers point at the offending line
    try {
        parse_edge_list("0 1\n2 2\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("one-indexed transcription") {
    ParseOptions one;
    one.one_indexed = true;
    auto g = parse_edge_list("1 2\n2 3\n", one);
    CHECK(g.order() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK_THROWS_AS(parse_edge_list("0 1\n", one), parse_error);
    CHECK(format_edge_list(g, one) == "n 3\n1 2\n2 3\n");
}

TEST_CASE("format/parse round trip on every named family") {
    std::vector<Graph> graphs = {families::complete(5),
                                 families::complete_bipartite(3, 4),
                                 families::complete_multipartite({2, 2, 2}),
                                 families::cocktail_party(3),
                                 families::star(6),
                                 families::path(5),
                                 families::cycle(6),
                                 families::hypercube(3),
                                 families::petersen(),
                                 families::prism(),
                                 families::join_complete_with_empty(3, 8)};
    for (const auto& g : graphs) {
        auto back = parse_edge_list(format_edge_list(g));
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("bounds report is deterministic and reloadable") {
    auto g = families::petersen();
    auto json1 = report_to_json(build_report(g));
    auto json2 = report_to_json(build_report(g));
    CHECK(json1 == json2);

    auto doc = load_report(json1); // re-verifies every witness on load
    CHECK(doc.graph.order() == 10);
    CHECK(doc.alpha.has_value());
    CHECK(doc.alpha->value == 4);
    CHECK(doc.alliance_numbers.at("global_offensive").value == 4);
    CHECK(doc.alliance_numbers.at("global_strong_offensive").value == 6);
    CHECK(doc.bounds.size() == 31);
}

TEST_CASE("report loader rejects unknown fields and doctored witnesses") {
    auto g = families::cycle(5);
    auto json = report_to_json(build_report(g));

    auto inject = [&](const std::string& needle, const std::string& replacement) {
        std::string copy = json;
        auto pos = copy.find(needle);
        REQUIRE(pos != std::string::npos);
        copy.replace(pos, needle.size(), replacement);
        return copy;
    };

    CHECK_THROWS_AS(load_report(inject("\"schema_version\": 1", "\"schema_version\": 2")),
                    parse_error);
    CHECK_THROWS_AS(load_report(inject("\"schema_version\": 1",
                                       "\"schema_version\": 1, \"surprise\": true")),
                    parse_error);
    // corrupt the independence witness: {0,2} -> {0,1} (adjacent in C5)
    CHECK_THROWS_AS(load_report(inject("\"alpha\": {\n      \"value\": 2,\n      \"witness\": [\n        0,\n        2\n      ]",
                                       "\"alpha\": {\n      \"value\": 2,\n      \"witness\": [\n        0,\n        1\n      ]")),
                    parse_error);
    CHECK_THROWS_AS(load_report("not json"), parse_error);
    // wrong value types and broken graph invariants also surface as parse errors
    CHECK_THROWS_AS(load_report(inject("\"n\": 5", "\"n\": \"five\"")), parse_error);
    CHECK_THROWS_AS(load_report(inject("\"connected\": true", "\"connected\": 7")), parse_error);
}

TEST_CASE("reports for capacity-limited graphs omit exact values") {
    auto big = families::random_gnp(30, 0.2, 9);
    auto doc = build_report(big);
    CHECK_FALSE(doc.alpha.has_value());
    CHECK(doc.alliance_numbers.empty());
    CHECK(doc.bounds.size() == 31);
    auto json = report_to_json(doc);
    auto loaded = load_report(json);
    CHECK(loaded.graph.size() == big.size());
}
