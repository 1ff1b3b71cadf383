#pragma once

#include <string>

#include <json.hpp>

#include "tscay/analysis.hpp"
#include "tscay/connection.hpp"
#include "tscay/graph_export.hpp"

namespace tscay {

namespace detail {

inline nlohmann::json witness_json(const FiniteGroup& g,
                                   const std::optional<ConditionWitness>& w) {
    if (!w) return nullptr;
    auto name_or_null = [&](int v) {
        return v < 0 ? nlohmann::json(nullptr) : nlohmann::json(g.name(v));
    };
    return {{"g", name_or_null(w->g)}, {"a", name_or_null(w->a)}, {"b", name_or_null(w->b)}};
}

inline nlohmann::json condition_json(const FiniteGroup& g, const ConditionResult& c) {
    return {{"pass", c.pass}, {"witness", witness_json(g, c.witness)}};
}

inline nlohmann::json set_json(const FiniteGroup& g, const ElementSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int e : s.elements()) arr.push_back(g.name(e));
    return arr;
}

inline nlohmann::json components_json(const FiniteGroup& g,
                                      const std::vector<std::vector<int>>& comps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& comp : comps) {
        nlohmann::json c = nlohmann::json::array();
        for (int v : comp) c.push_back(g.name(v));
        arr.push_back(std::move(c));
    }
    return arr;
}

}  // namespace detail

/// Full analysis of a pair, as a JSON report with a fixed shape:
/// { group, L, R, property, valency, connectivity: { factorization, star,
///   components, delta }, cayley, transitivity, prime_valency }.
/// Sections that require the pair property (cayley, prime_valency) are
/// null when it fails; searches that were skipped or hit their budget
/// leave null ("unknown"), never a guessed boolean.
inline nlohmann::json analyze_report(const ConnectionPair& p, const AnalysisOptions& opts = {}) {
    const FiniteGroup& g = p.group();
    nlohmann::json j;
    j["group"] = g.description();
    j["L"] = detail::set_json(g, p.left());
    j["R"] = detail::set_json(g, p.right());

    PropertyVerdict prop = check_property(p);
    j["property"] = {{"cond1", detail::condition_json(g, prop.cond1)},
                     {"cond2", detail::condition_json(g, prop.cond2)},
                     {"cond3", detail::condition_json(g, prop.cond3)},
                     {"overall", prop.overall}};
    j["valency"] = p.left().size() * p.right().size();

    TwoSidedCayleyGraph graph = build_graph(p);
    DefectReport defects = scan_defects(graph);
    if (!defects.simple_undirected())
        j["defects"] = {{"symmetric", defects.symmetric},
                        {"loops", defects.loops.size()},
                        {"multiple_arcs", defects.multi_arcs.size()}};

    nlohmann::json conn;
    bool criterion_applies =
        prop.overall && p.left().is_inverse_closed() && p.right().is_inverse_closed();
    conn["factorization"] =
        product(subgroup_closure(p.left()), subgroup_closure(p.right())) == ElementSet::full(g);
    if (criterion_applies) {
        ConnectivityVerdict cv = check_connectivity_criterion(p);
        conn["star"] = cv.star_holds;
        conn["components"] = detail::components_json(g, cv.components);
        conn["delta"] = cv.delta_labels ? nlohmann::json(*cv.delta_labels) : nullptr;
    } else {
        conn["star"] = nullptr;
        conn["components"] = detail::components_json(g, weak_components(graph));
        conn["delta"] = nullptr;
    }
    j["connectivity"] = std::move(conn);

    if (prop.overall) {
        CayleyVerdict cay = check_cayley_conditions(graph);
        nlohmann::json cj = {{"via_GR", cay.via_gr},
                             {"via_GL", cay.via_gl},
                             {"via_delta", cay.via_delta},
                             {"via_delta_prime", cay.via_delta_prime}};
        cj["connection_set"] = cay.cayley_connection_set
                                   ? detail::set_json(g, *cay.cayley_connection_set)
                                   : nlohmann::json(nullptr);
        cj["connection_set_exact"] = cay.cayley_connection_set
                                         ? nlohmann::json(cay.connection_set_exact)
                                         : nlohmann::json(nullptr);
        if (cay.any_translation()) {
            cj["is_cayley"] = true;
            cj["regular_subgroup_found"] = nullptr;  // not searched; already settled
        } else if (graph.order() <= opts.aut_vertex_cap) {
            try {
                auto reg = sabidussi_regular_subgroup(simple_view(graph), opts.search);
                cj["regular_subgroup_found"] = reg.has_value();
                cj["is_cayley"] = reg.has_value();
            } catch (const SearchBudgetExceeded&) {
                cj["regular_subgroup_found"] = nullptr;
                cj["is_cayley"] = nullptr;
            }
        } else {
            cj["regular_subgroup_found"] = nullptr;
            cj["is_cayley"] = nullptr;
        }
        j["cayley"] = std::move(cj);
    } else {
        j["cayley"] = nullptr;
    }

    TransitivityVerdict tv = check_transitivity(graph, opts);
    j["transitivity"] = {
        {"k_transitive", tv.k_transitive},
        {"orbit_count", tv.orbit_count ? nlohmann::json(*tv.orbit_count) : nullptr},
        {"vertex_transitive",
         tv.vertex_transitive ? nlohmann::json(*tv.vertex_transitive) : nullptr}};

    nlohmann::json pv;
    int valency = p.left().size() * p.right().size();
    pv["valency"] = valency;
    pv["is_prime"] = detail::is_prime(valency);
    if (prop.overall && detail::is_prime(valency) &&
        weak_components(graph).size() == 1) {
        PrimeValencyReport rep = prime_valency_analysis(graph, opts);
        pv["outcome"] =
            rep.outcome == PrimeValencyReport::Outcome::cayley ? "cayley" : "dichotomy";
        pv["via_translation"] = rep.via_translation;
        pv["via_regular_subgroup"] = rep.via_regular_subgroup;
        if (rep.outcome == PrimeValencyReport::Outcome::dichotomy) {
            pv["singleton_side"] = *rep.singleton_side == Side::left ? "L" : "R";
            pv["singleton_element"] = g.name(*rep.singleton_element);
            pv["singleton_class"] = detail::set_json(g, *rep.singleton_class);
            pv["generation_check"] = *rep.generation_check;
            pv["disjointness_check"] = *rep.disjointness_check;
        }
    } else {
        pv["outcome"] = nullptr;
    }
    j["prime_valency"] = std::move(pv);
    return j;
}

/// Plain-text rendering of an analysis report for terminal output.
inline std::string render_analysis_text(const nlohmann::json& j) {
    auto tf = [](const nlohmann::json& v) -> std::string {
        if (v.is_null()) return "unknown";
        if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
        return v.dump();
    };
    std::string s;
    s += "2SCay(" + j["group"].get<std::string>() + "; L, R)\n";
    s += "  L = {" + [&] {
        std::string t;
        for (const auto& e : j["L"]) t += (t.empty() ? "" : ",") + e.get<std::string>();
        return t;
    }() + "},  R = {" + [&] {
        std::string t;
        for (const auto& e : j["R"]) t += (t.empty() ? "" : ",") + e.get<std::string>();
        return t;
    }() + "}\n";
    const auto& prop = j["property"];
    s += "  pair property: " + std::string(prop["overall"].get<bool>() ? "holds" : "fails");
    s += " (1:" + tf(prop["cond1"]["pass"]) + " 2:" + tf(prop["cond2"]["pass"]) +
         " 3:" + tf(prop["cond3"]["pass"]) + ")\n";
    s += "  valency: " + j["valency"].dump() + "\n";
    const auto& conn = j["connectivity"];
    s += "  connectivity: " + std::to_string(conn["components"].size()) + " component(s)";
    s += ", factorization " + tf(conn["factorization"]);
    s += ", star " + tf(conn["star"]) + "\n";
    if (j["cayley"].is_null()) {
        s += "  cayley: n/a (pair property fails)\n";
    } else {
        const auto& c = j["cayley"];
        s += "  cayley: via_GR " + tf(c["via_GR"]) + ", via_GL " + tf(c["via_GL"]) +
             ", via_delta " + tf(c["via_delta"]) + ", via_delta_prime " +
             tf(c["via_delta_prime"]) + ", is_cayley " + tf(c["is_cayley"]) + "\n";
    }
    const auto& t = j["transitivity"];
    s += "  transitivity: k_transitive " + tf(t["k_transitive"]) + ", orbits " +
         tf(t["orbit_count"]) + ", vertex_transitive " + tf(t["vertex_transitive"]) + "\n";
    const auto& pv = j["prime_valency"];
    if (!pv["outcome"].is_null())
        s += "  prime valency " + pv["valency"].dump() + ": outcome " +
             pv["outcome"].get<std::string>() + "\n";
    return s;
}

}  // namespace tscay
