#pragma once

#include <string>

#include <json.hpp>

#include "tscay/connection.hpp"

namespace tscay {

/// Graphviz DOT rendering. Simple undirected graphs render as `graph`
/// with one edge per unordered pair; anything else renders as `digraph`
/// with every labelled arc spelled out, so defects stay visible.
inline std::string to_dot(const TwoSidedCayleyGraph& g) {
    const FiniteGroup& gr = g.group();
    std::string out;
    bool undirected = g.simple_flag() == SimpleFlag::simple_undirected;
    out += undirected ? "graph tscay {\n" : "digraph tscay {\n";
    out += "  // 2SCay(" + gr.description() + "; {" + g.left().to_string() + "}; {" +
           g.right().to_string() + "})\n";
    for (int v = 0; v < g.order(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + gr.name(v) + "\"];\n";
    if (undirected) {
        for (int u = 0; u < g.order(); ++u)
            g.adjacency()[std::size_t(u)].for_each([&](int v) {
                if (u <= v)
                    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
            });
    } else {
        for (const Arc& a : g.arcs())
            out += "  v" + std::to_string(a.source) + " -> v" + std::to_string(a.target) +
                   " [label=\"(" + gr.name(a.l) + "," + gr.name(a.r) + ")\"];\n";
    }
    out += "}\n";
    return out;
}

/// JSON graph dump: group, connection sets, flag, and every labelled arc
/// in build order as {source, target, l, r} (element names).
inline nlohmann::json graph_to_json(const TwoSidedCayleyGraph& g) {
    const FiniteGroup& gr = g.group();
    nlohmann::json j;
    j["group"] = gr.description();
    j["order"] = g.order();
    j["L"] = nlohmann::json::array();
    for (int l : g.left().elements()) j["L"].push_back(gr.name(l));
    j["R"] = nlohmann::json::array();
    for (int r : g.right().elements()) j["R"].push_back(gr.name(r));
    switch (g.simple_flag()) {
        case SimpleFlag::simple_undirected: j["simple"] = true; break;
        case SimpleFlag::defective: j["simple"] = false; break;
        case SimpleFlag::unverified: j["simple"] = nullptr; break;
    }
    j["arcs"] = nlohmann::json::array();
    for (const Arc& a : g.arcs())
        j["arcs"].push_back({{"source", gr.name(a.source)},
                             {"target", gr.name(a.target)},
                             {"l", gr.name(a.l)},
                             {"r", gr.name(a.r)}});
    return j;
}

}  // namespace tscay
