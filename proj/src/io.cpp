#include "alliance/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "alliance/alliance.hpp"
#include "alliance/errors.hpp"

namespace alliance {

namespace {

using nlohmann::ordered_json;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Graph parse_edge_list(const std::string& text, const ParseOptions& opts) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<int> declared_n;
    bool saw_data = false;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    auto shift = [&](long long raw, int lno) -> int {
        long long v = raw - (opts.one_indexed ? 1 : 0);
        if (v < 0)
            throw parse_error("vertex id " + std::to_string(raw) + " out of range" +
                                  (opts.one_indexed ? " (ids are 1-based here)" : ""),
                              lno);
        if (v > 1000000) throw parse_error("vertex id too large", lno);
        return static_cast<int>(v);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::string first;
        ls >> first;
        if (!saw_data && first == "n") {
            long long count;
            std::string extra;
            if (!(ls >> count) || (ls >> extra))
                throw parse_error("malformed header, expected 'n <count>'", lineno);
            if (count < 1) throw parse_error("declared order must be at least 1", lineno);
            declared_n = static_cast<int>(count);
            saw_data = true;
            continue;
        }
        saw_data = true;
        long long raw_u, raw_v;
        std::string extra;
        std::istringstream es(t);
        if (!(es >> raw_u >> raw_v) || (es >> extra))
            throw parse_error("malformed line, expected 'u v'", lineno);
        int u = shift(raw_u, lineno);
        int v = shift(raw_v, lineno);
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(raw_u), lineno);
        if (declared_n && (u >= *declared_n || v >= *declared_n))
            throw parse_error("vertex id exceeds declared order " + std::to_string(*declared_n),
                              lineno);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw parse_error("duplicate edge (" + std::to_string(raw_u) + "," +
                                  std::to_string(raw_v) + ")",
                              lineno);
        edges.emplace_back(key.first, key.second);
        max_id = std::max({max_id, u, v});
    }
    if (!declared_n && max_id < 0)
        throw parse_error("empty document: no header and no edges");
    int n = declared_n ? *declared_n : max_id + 1;
    return Graph::from_edges(n, edges);
}

std::string format_edge_list(const Graph& g, const ParseOptions& opts) {
    std::ostringstream out;
    int off = opts.one_indexed ? 1 : 0;
    out << "n " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << (u + off) << " " << (v + off) << "\n";
    return out.str();
}

ReportDocument build_report(const Graph& g, const BoundOptions& opts) {
    ReportDocument doc;
    doc.graph = g;
    doc.connected = g.is_connected();
    if (doc.connected) doc.diameter = g.diameter();
    doc.mu = laplacian_spectral_radius(g);

    int exact_cap = opts.exact_cap.value_or(default_exact_cap());
    if (g.order() <= exact_cap) {
        doc.alpha = independence_number(g);
        doc.gamma = k_domination_number(g, 1);
        doc.gamma2 = k_domination_number(g, 2);
        if (doc.connected && g.order() >= 2) doc.gamma_c = connected_domination_number(g);
        SolveOptions so;
        so.exact_cap = exact_cap;
        for (AllianceKind kind : {AllianceKind::Offensive, AllianceKind::StrongOffensive,
                                  AllianceKind::GlobalOffensive, AllianceKind::GlobalStrongOffensive})
            doc.alliance_numbers.emplace(to_string(kind), min_alliance(g, kind, so));
        if (doc.connected) {
            doc.alliance_numbers.emplace("global_connected_offensive",
                                         min_connected_alliance(g, AllianceKind::GlobalOffensive, so));
            doc.alliance_numbers.emplace(
                "global_connected_strong_offensive",
                min_connected_alliance(g, AllianceKind::GlobalStrongOffensive, so));
        }
    }
    doc.bounds = evaluate_all_bounds(g, opts);
    return doc;
}

namespace {

ordered_json set_to_json(const VertexSet& s) {
    ordered_json arr = ordered_json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

ordered_json witnessed_to_json(const WitnessedValue& wv) {
    return ordered_json{{"value", wv.value}, {"witness", set_to_json(wv.witness)}};
}

ordered_json solve_to_json(const SolveResult& r) {
    return ordered_json{{"value", r.value},
                        {"witness", set_to_json(r.witness)},
                        {"nodes_explored", r.nodes_explored}};
}

ordered_json record_to_json(const BoundRecord& r) {
    ordered_json j;
    j["id"] = r.id;
    j["description"] = r.description;
    j["hypothesis_met"] = r.hypothesis_met;
    j["bound_value"] = r.bound_value ? ordered_json(*r.bound_value) : ordered_json(nullptr);
    j["bound_real"] = r.bound_real ? ordered_json(*r.bound_real) : ordered_json(nullptr);
    j["exact_value"] = r.exact_value ? ordered_json(*r.exact_value) : ordered_json(nullptr);
    j["holds"] = r.holds ? ordered_json(*r.holds) : ordered_json(nullptr);
    j["tight"] = r.tight ? ordered_json(*r.tight) : ordered_json(nullptr);
    j["note"] = r.note;
    return j;
}

const std::vector<std::string> kAllianceKeys = {
    "offensive", "strong_offensive", "global_offensive", "global_strong_offensive",
    "global_connected_offensive", "global_connected_strong_offensive"};

} // namespace

std::string report_to_json(const ReportDocument& doc) {
    ordered_json j;
    j["schema_version"] = doc.schema_version;
    ordered_json graph;
    graph["n"] = doc.graph.order();
    graph["m"] = doc.graph.size();
    graph["min_degree"] = doc.graph.min_degree();
    graph["max_degree"] = doc.graph.max_degree();
    graph["connected"] = doc.connected;
    graph["diameter"] = doc.diameter ? ordered_json(*doc.diameter) : ordered_json(nullptr);
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : doc.graph.edges()) edges.push_back(ordered_json::array({u, v}));
    graph["edges"] = edges;
    j["graph"] = graph;

    ordered_json params;
    params["alpha"] = doc.alpha ? witnessed_to_json(*doc.alpha) : ordered_json(nullptr);
    params["gamma"] = doc.gamma ? witnessed_to_json(*doc.gamma) : ordered_json(nullptr);
    params["gamma_2"] = doc.gamma2 ? witnessed_to_json(*doc.gamma2) : ordered_json(nullptr);
    params["gamma_c"] = doc.gamma_c ? witnessed_to_json(*doc.gamma_c) : ordered_json(nullptr);
    params["mu"] = ordered_json{{"value", doc.mu.mu}, {"tolerance", doc.mu.tolerance}};
    j["parameters"] = params;

    ordered_json alli;
    for (const auto& key : kAllianceKeys) {
        auto it = doc.alliance_numbers.find(key);
        alli[key] = it == doc.alliance_numbers.end() ? ordered_json(nullptr)
                                                     : solve_to_json(it->second);
    }
    j["alliance_numbers"] = alli;

    ordered_json bounds = ordered_json::array();
    for (const auto& r : doc.bounds) bounds.push_back(record_to_json(r));
    j["bounds"] = bounds;
    return j.dump(2) + "\n";
}

namespace {

void require_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                  const std::string& where) {
    if (!obj.is_object()) throw parse_error("report: expected object at " + where);
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw parse_error("report: unknown field '" + it.key() + "' in " + where);
}

VertexSet set_from_json(const ordered_json& arr, int n, const std::string& where) {
    if (!arr.is_array()) throw parse_error("report: expected array at " + where);
    VertexSet s(n);
    for (const auto& x : arr) {
        if (!x.is_number_integer()) throw parse_error("report: non-integer vertex in " + where);
        int v = x.get<int>();
        if (v < 0 || v >= n) throw parse_error("report: vertex out of range in " + where);
        s.add(v);
    }
    return s;
}

WitnessedValue witnessed_from_json(const ordered_json& j, int n, const std::string& where) {
    require_keys(j, {"value", "witness"}, where);
    return WitnessedValue{j.at("value").get<int>(), set_from_json(j.at("witness"), n, where)};
}

ReportDocument load_report_impl(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("report: invalid JSON: ") + e.what());
    }
    require_keys(j, {"schema_version", "graph", "parameters", "alliance_numbers", "bounds"},
                 "document");
    if (!j.at("schema_version").is_number_integer() || j.at("schema_version").get<int>() != 1)
        throw parse_error("report: unsupported schema version");

    const auto& jg = j.at("graph");
    require_keys(jg, {"n", "m", "min_degree", "max_degree", "connected", "diameter", "edges"},
                 "graph");
    int n = jg.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : jg.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw parse_error("report: malformed edge entry");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    ReportDocument doc;
    doc.graph = Graph::from_edges(n, edges);
    if (doc.graph.size() != jg.at("m").get<int>())
        throw parse_error("report: edge count does not match m");
    doc.connected = jg.at("connected").get<bool>();
    if (doc.connected != doc.graph.is_connected())
        throw parse_error("report: connectivity flag does not match the edge list");
    if (!jg.at("diameter").is_null()) doc.diameter = jg.at("diameter").get<int>();

    const auto& jp = j.at("parameters");
    require_keys(jp, {"alpha", "gamma", "gamma_2", "gamma_c", "mu"}, "parameters");
    const auto& jm = jp.at("mu");
    require_keys(jm, {"value", "tolerance"}, "parameters.mu");
    doc.mu = SpectralResult{jm.at("value").get<double>(), jm.at("tolerance").get<double>()};

    // Re-verify every stored witness against the property it certifies.
    if (!jp.at("alpha").is_null()) {
        doc.alpha = witnessed_from_json(jp.at("alpha"), n, "parameters.alpha");
        bool independent = true;
        doc.alpha->witness.for_each([&](int v) {
            if (doc.graph.neighbors_in_count(v, doc.alpha->witness) > 0) independent = false;
        });
        if (!independent || doc.alpha->witness.size() != doc.alpha->value)
            throw parse_error("report: alpha witness failed re-verification");
    }
    auto verify_kdom = [&](const WitnessedValue& wv, int k, const std::string& where) {
        if (wv.witness.size() != wv.value)
            throw parse_error("report: " + where + " witness size mismatch");
        VertexSet outside = wv.witness.complement();
        bool ok = true;
        outside.for_each([&](int v) {
            if (doc.graph.neighbors_in_count(v, wv.witness) < k) ok = false;
        });
        if (!ok) throw parse_error("report: " + where + " witness failed re-verification");
    };
    if (!jp.at("gamma").is_null()) {
        doc.gamma = witnessed_from_json(jp.at("gamma"), n, "parameters.gamma");
        verify_kdom(*doc.gamma, 1, "gamma");
    }
    if (!jp.at("gamma_2").is_null()) {
        doc.gamma2 = witnessed_from_json(jp.at("gamma_2"), n, "parameters.gamma_2");
        verify_kdom(*doc.gamma2, 2, "gamma_2");
    }
    if (!jp.at("gamma_c").is_null()) {
        doc.gamma_c = witnessed_from_json(jp.at("gamma_c"), n, "parameters.gamma_c");
        verify_kdom(*doc.gamma_c, 1, "gamma_c");
        if (!induced_subgraph(doc.graph, doc.gamma_c->witness).graph.is_connected())
            throw parse_error("report: gamma_c witness does not induce a connected subgraph");
    }

    const auto& ja = j.at("alliance_numbers");
    require_keys(ja, std::set<std::string>(kAllianceKeys.begin(), kAllianceKeys.end()),
                 "alliance_numbers");
    for (const auto& key : kAllianceKeys) {
        if (!ja.contains(key) || ja.at(key).is_null()) continue;
        const auto& js = ja.at(key);
        require_keys(js, {"value", "witness", "nodes_explored"}, "alliance_numbers." + key);
        bool connected_variant = key.rfind("global_connected", 0) == 0;
        AllianceKind kind;
        if (key == "offensive") kind = AllianceKind::Offensive;
        else if (key == "strong_offensive") kind = AllianceKind::StrongOffensive;
        else if (key == "global_offensive" || key == "global_connected_offensive")
            kind = AllianceKind::GlobalOffensive;
        else kind = AllianceKind::GlobalStrongOffensive;
        SolveResult r{kind,
                      connected_variant ? Connectedness::AllianceConnected : Connectedness::None,
                      js.at("value").get<int>(), set_from_json(js.at("witness"), n, key),
                      js.at("nodes_explored").get<long long>()};
        if (r.witness.size() != r.value)
            throw parse_error("report: " + key + " witness size mismatch");
        if (!check_alliance(doc.graph, r.witness, kind).satisfied)
            throw parse_error("report: " + key + " witness failed re-verification");
        if (connected_variant && !induced_subgraph(doc.graph, r.witness).graph.is_connected())
            throw parse_error("report: " + key + " witness does not induce a connected subgraph");
        doc.alliance_numbers.emplace(key, std::move(r));
    }

    for (const auto& jr : j.at("bounds")) {
        require_keys(jr,
                     {"id", "description", "hypothesis_met", "bound_value", "bound_real",
                      "exact_value", "holds", "tight", "note"},
                     "bounds[]");
        BoundRecord r;
        r.id = jr.at("id").get<std::string>();
        r.description = jr.at("description").get<std::string>();
        r.hypothesis_met = jr.at("hypothesis_met").get<bool>();
        if (!jr.at("bound_value").is_null()) r.bound_value = jr.at("bound_value").get<long long>();
        if (!jr.at("bound_real").is_null()) r.bound_real = jr.at("bound_real").get<double>();
        if (!jr.at("exact_value").is_null()) r.exact_value = jr.at("exact_value").get<long long>();
        if (!jr.at("holds").is_null()) r.holds = jr.at("holds").get<bool>();
        if (!jr.at("tight").is_null()) r.tight = jr.at("tight").get<bool>();
        r.note = jr.at("note").get<std::string>();
        doc.bounds.push_back(std::move(r));
    }
    return doc;
}

} // namespace

ReportDocument load_report(const std::string& json_text) {
    // Type mismatches and graph-invariant failures inside a doctored
    // document all surface as parse errors, not as raw library exceptions.
    try {
        return load_report_impl(json_text);
    } catch (const parse_error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("report: ") + e.what());
    } catch (const std::domain_error& e) {
        throw parse_error(std::string("report: ") + e.what());
    }
}

} // namespace alliance
