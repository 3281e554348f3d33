// alliancekit: exact alliance numbers, witness constructions and a certified
// inequality catalog for small graphs.
//
// Exit codes: 0 success, 1 domain/hypothesis error, 2 parse/usage error,
// 3 capacity error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alliance/alliance.hpp"
#include "alliance/bounds.hpp"
#include "alliance/constructions.hpp"
#include "alliance/errors.hpp"
#include "alliance/families.hpp"
#include "alliance/io.hpp"
#include "alliance/solvers.hpp"

namespace {

using namespace alliance;
using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, bool one_indexed) {
    ParseOptions po;
    po.one_indexed = one_indexed;
    return parse_edge_list(read_input(path), po);
}

ordered_json set_json(const VertexSet& s, int off) {
    ordered_json arr = ordered_json::array();
    s.for_each([&](int v) { arr.push_back(v + off); });
    return arr;
}

std::string set_text(const VertexSet& s, int off) {
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += " ";
        out += std::to_string(v + off);
    });
    return out.empty() ? "(empty)" : out;
}

VertexSet parse_set_flag(const std::string& spec, int n, bool one_indexed) {
    VertexSet s(n);
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        long long raw = std::stoll(tok);
        long long v = raw - (one_indexed ? 1 : 0);
        if (v < 0 || v >= n)
            throw std::invalid_argument("--set: vertex " + tok + " out of range");
        s.add(static_cast<int>(v));
    }
    if (s.empty()) throw std::invalid_argument("--set: empty vertex set");
    return s;
}

int cmd_solve(const std::string& file, const std::string& kind_name, bool connected_variant,
              bool as_json, bool one_indexed) {
    Graph g = load_graph(file, one_indexed);
    AllianceKind kind = kind_from_string(kind_name);
    SolveResult r = connected_variant ? min_connected_alliance(g, kind)
                                      : min_alliance(g, kind);
    int off = one_indexed ? 1 : 0;
    if (as_json) {
        ordered_json j;
        j["kind"] = kind_name;
        j["connected"] = connected_variant;
        j["value"] = r.value;
        j["witness"] = set_json(r.witness, off);
        j["nodes_explored"] = r.nodes_explored;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kind: " << kind_name << (connected_variant ? " (connected)" : "") << "\n"
                  << "value: " << r.value << "\n"
                  << "witness: " << set_text(r.witness, off) << "\n"
                  << "nodes explored: " << r.nodes_explored << "\n";
    }
    return 0;
}

int cmd_bounds(const std::string& file, bool one_indexed) {
    Graph g = load_graph(file, one_indexed);
    ReportDocument doc = build_report(g);
    std::cout << report_to_json(doc);
    int violations = 0;
    for (const auto& rec : doc.bounds)
        if (rec.holds.has_value() && !*rec.holds) {
            std::cerr << "VIOLATION " << rec.id << ": " << rec.description << " (bound "
                      << (rec.bound_value ? std::to_string(*rec.bound_value) : std::string("?"))
                      << ", exact "
                      << (rec.exact_value ? std::to_string(*rec.exact_value) : std::string("?"))
                      << ")\n";
            ++violations;
        }
    return violations == 0 ? 0 : 1;
}

int cmd_check(const std::string& file, const std::string& kind_name, const std::string& set_spec,
              bool as_json, bool one_indexed) {
    Graph g = load_graph(file, one_indexed);
    AllianceKind kind = kind_from_string(kind_name);
    VertexSet s = parse_set_flag(set_spec, g.order(), one_indexed);
    PredicateCertificate cert = check_alliance(g, s, kind);
    int off = one_indexed ? 1 : 0;
    if (as_json) {
        ordered_json j;
        j["kind"] = kind_name;
        j["set"] = set_json(cert.set, off);
        j["satisfied"] = cert.satisfied;
        if (cert.violator) {
            j["violator"] = ordered_json{{"vertex", cert.violator->vertex + off},
                                         {"neighbors_inside", cert.violator->inside},
                                         {"neighbors_outside", cert.violator->outside}};
        } else {
            j["violator"] = nullptr;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kind: " << kind_name << "\n"
                  << "set: " << set_text(cert.set, off) << "\n"
                  << "satisfied: " << (cert.satisfied ? "true" : "false") << "\n";
        if (cert.violator)
            std::cout << "violator: vertex " << (cert.violator->vertex + off)
                      << " (neighbors inside: " << cert.violator->inside
                      << ", outside: " << cert.violator->outside << ")\n";
    }
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, bool one_indexed) {
    Graph g = [&]() {
        if (family == "gnp") {
            if (params.size() != 2)
                throw std::invalid_argument("gnp expects <n> <p>");
            return families::random_gnp(std::stoi(params[0]), std::stod(params[1]), seed);
        }
        if (family == "regular") {
            if (params.size() != 2)
                throw std::invalid_argument("regular expects <n> <d>");
            return families::random_regular(std::stoi(params[0]), std::stoi(params[1]), seed);
        }
        std::vector<long long> ps;
        for (const auto& p : params) ps.push_back(std::stoll(p));
        return families::named(family, ps);
    }();
    ParseOptions po;
    po.one_indexed = one_indexed;
    std::cout << format_edge_list(g, po);
    return 0;
}

std::vector<EnsembleGraph> build_ensemble(const std::string& spec, const std::string& seeds) {
    std::vector<EnsembleGraph> out;
    auto seed_range = [&]() -> std::pair<long long, long long> {
        if (seeds.empty()) return {0, -1};
        auto pos = seeds.find("..");
        if (pos == std::string::npos)
            throw std::invalid_argument("--seeds expects the form a..b");
        return {std::stoll(seeds.substr(0, pos)), std::stoll(seeds.substr(pos + 2))};
    };
    if (spec.rfind("labeled:", 0) == 0) {
        int n = std::stoi(spec.substr(8));
        families::for_each_labeled_graph(n, [&](const Graph& g, std::uint64_t code) {
            out.push_back(EnsembleGraph{g, "labeled:" + std::to_string(n) + "#" + std::to_string(code)});
        });
        return out;
    }
    if (spec == "named") {
        out.push_back({families::cocktail_party(3), "cocktail_party 3"});
        out.push_back({families::star(6), "star 6"});
        out.push_back({families::hypercube(3), "hypercube 3"});
        out.push_back({families::complete_bipartite(3, 3), "complete_bipartite 3 3"});
        out.push_back({families::petersen(), "petersen"});
        out.push_back({families::prism(), "prism"});
        out.push_back({families::join_complete_with_empty(3, 8), "join_complete_with_empty 3 8"});
        return out;
    }
    if (spec.rfind("gnp:", 0) == 0) {
        auto rest = spec.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("--ensemble gnp:<n>:<p> expected");
        int n = std::stoi(rest.substr(0, colon));
        double p = std::stod(rest.substr(colon + 1));
        auto [a, b] = seed_range();
        for (long long s = a; s <= b; ++s)
            out.push_back({families::random_gnp(n, p, static_cast<std::uint64_t>(s)),
                           spec + "#seed=" + std::to_string(s)});
        return out;
    }
    throw std::invalid_argument("unknown ensemble spec '" + spec +
                                "' (use labeled:<n>, named, or gnp:<n>:<p>)");
}

int cmd_survey(const std::string& ensemble_spec, const std::string& seeds,
               const std::string& bound_filter, bool as_json) {
    std::vector<std::string> filter;
    if (!bound_filter.empty()) {
        std::stringstream ss(bound_filter);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) filter.push_back(tok);
    }
    auto ensemble = build_ensemble(ensemble_spec, seeds);
    auto rows = tightness_survey(ensemble, filter);
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["id"] = r.id;
            j["applicable"] = r.applicable;
            j["holds"] = r.holds;
            j["tight"] = r.tight;
            j["violations"] = r.violations;
            j["hypothesis_unmet"] = r.hypothesis_unmet;
            j["not_evaluable"] = r.not_evaluable;
            j["smallest_tight"] = r.smallest_tight ? ordered_json(r.smallest_tight->second)
                                                   : ordered_json(nullptr);
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::printf("%-5s %10s %10s %10s %10s %8s %s\n", "id", "applicable", "holds", "tight",
                    "unmet", "n/a", "smallest tight witness");
        for (const auto& r : rows)
            std::printf("%-5s %10lld %10lld %10lld %10lld %8lld %s\n", r.id.c_str(), r.applicable,
                        r.holds, r.tight, r.hypothesis_unmet, r.not_evaluable,
                        r.smallest_tight ? r.smallest_tight->second.c_str() : "-");
        bool violated = false;
        for (const auto& r : rows) violated = violated || r.violations > 0;
        if (violated) {
            std::cerr << "VIOLATION: some catalog inequality failed on this ensemble\n";
            return 1;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alliance numbers, witness constructions and bound certification for small graphs"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string kind_name = "global_offensive";
    std::string set_spec;
    std::string family;
    std::vector<std::string> family_params;
    std::string ensemble_spec, seeds, bound_filter;
    std::uint64_t seed = 0;
    bool connected_variant = false, as_json = false, one_indexed = false;

    auto* solve = app.add_subcommand("solve", "exact minimum alliance number and witness");
    solve->add_option("file", file, "edge-list file ('-' for stdin)");
    solve->add_option("--kind", kind_name, "alliance kind")->capture_default_str();
    solve->add_flag("--connected", connected_variant, "restrict to alliances inducing a connected subgraph");
    solve->add_flag("--json", as_json, "JSON output");
    solve->add_flag("--one-indexed", one_indexed, "vertex ids are 1-based in input/output");

    auto* bounds_cmd = app.add_subcommand("bounds", "full bound-catalog report as JSON");
    bounds_cmd->add_option("file", file, "edge-list file ('-' for stdin)");
    bounds_cmd->add_flag("--one-indexed", one_indexed, "vertex ids are 1-based in input");

    auto* check = app.add_subcommand("check", "evaluate an alliance predicate for a given set");
    check->add_option("file", file, "edge-list file ('-' for stdin)");
    check->add_option("--kind", kind_name, "alliance kind")->capture_default_str();
    check->add_option("--set", set_spec, "comma-separated vertex list")->required();
    check->add_flag("--json", as_json, "JSON output");
    check->add_flag("--one-indexed", one_indexed, "vertex ids are 1-based");

    auto* gen = app.add_subcommand("gen", "emit a named graph as an edge-list document");
    gen->add_option("family", family, "family name (or gnp / regular)")->required();
    gen->add_option("params", family_params, "family parameters");
    gen->add_option("--seed", seed, "seed for random families")->capture_default_str();
    gen->add_flag("--one-indexed", one_indexed, "emit 1-based vertex ids");

    auto* survey = app.add_subcommand("survey", "per-bound tightness tally over a graph ensemble");
    survey->add_option("--ensemble", ensemble_spec, "labeled:<n> | named | gnp:<n>:<p>")->required();
    survey->add_option("--seeds", seeds, "seed range a..b for random ensembles");
    survey->add_option("--bounds", bound_filter, "comma-separated bound ids (default: all)");
    survey->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(file, kind_name, connected_variant, as_json, one_indexed);
        if (bounds_cmd->parsed()) return cmd_bounds(file, one_indexed);
        if (check->parsed()) return cmd_check(file, kind_name, set_spec, as_json, one_indexed);
        if (gen->parsed()) return cmd_gen(family, family_params, seed, one_indexed);
        if (survey->parsed()) return cmd_survey(ensemble_spec, seeds, bound_filter, as_json);
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const hypothesis_error& e) {
        std::cerr << "hypothesis error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
