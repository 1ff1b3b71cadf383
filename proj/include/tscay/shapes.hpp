#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tscay/graph_search.hpp"
#include "tscay/simple_graph.hpp"

namespace tscay {

enum class ShapeKind {
    cycle,                    // C_n
    disjoint_cycles,          // k >= 2 disjoint copies of C_n
    complete_minus_matching,  // K_n minus a perfect matching
    lex_cycle_2k1,            // C_n[2K1]: cycle blown up by co-edges
    petersen,
    none,
};

/// Result of shape recognition. Every positive identification carries an
/// explicit certificate that was re-verified against the graph before the
/// verdict was returned, so a non-`none` kind is a proof, not a guess.
struct ShapeVerdict {
    ShapeKind kind = ShapeKind::none;
    int n = 0;  // cycle length / complete-graph order
    int k = 0;  // number of cycles for disjoint_cycles

    std::vector<std::vector<int>> cycles;          // cyclic vertex orders
    std::vector<std::pair<int, int>> matching;     // removed perfect matching
    std::vector<std::array<int, 2>> twin_classes;  // classes along the quotient cycle
    Perm petersen_map;                             // vertex -> Kneser-form Petersen

    std::string describe() const {
        switch (kind) {
            case ShapeKind::cycle: return "C" + std::to_string(n);
            case ShapeKind::disjoint_cycles:
                return std::to_string(k) + " x C" + std::to_string(n);
            case ShapeKind::complete_minus_matching:
                return "K" + std::to_string(n) + " minus a perfect matching";
            case ShapeKind::lex_cycle_2k1:
                return "C" + std::to_string(n) + "[2K1]";
            case ShapeKind::petersen: return "Petersen";
            case ShapeKind::none: return "unrecognised";
        }
        return "unrecognised";
    }
};

namespace detail {

/// Walk a 2-regular connected component into cyclic order, starting at its
/// smallest vertex and moving to the smaller neighbour first.
inline std::optional<std::vector<int>> trace_cycle(const SimpleGraph& g,
                                                   const std::vector<int>& comp) {
    if (comp.size() < 3) return std::nullopt;
    for (int v : comp)
        if (g.degree(v) != 2) return std::nullopt;
    std::vector<int> order{comp[0]};
    int prev = -1, cur = comp[0];
    while (true) {
        int next = -1;
        for (int w = 0; w < g.n; ++w)
            if (g.edge(cur, w) && w != prev) {
                next = w;
                break;
            }
        if (next == order[0]) break;
        order.push_back(next);
        prev = cur;
        cur = next;
        if (order.size() > comp.size()) return std::nullopt;  // not a single cycle
    }
    if (order.size() != comp.size()) return std::nullopt;
    return order;
}

/// Exact equality check: is g precisely the disjoint union of the given
/// cycles (consecutive members adjacent, nothing else)?
inline bool verify_cycles(const SimpleGraph& g, const std::vector<std::vector<int>>& cycles) {
    SimpleGraph expect(g.n);
    for (const auto& cyc : cycles)
        for (std::size_t i = 0; i < cyc.size(); ++i)
            expect.add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    return expect.adj == g.adj;
}

}  // namespace detail

/// Identify the graph against the small catalogue of shapes this toolkit
/// reports on. Tests run in a fixed order (cycle, disjoint cycles,
/// complete minus matching, C_n[2K1], Petersen) so ambiguous orders such
/// as K4 minus a matching = C4 resolve deterministically.
inline ShapeVerdict recognize_shape(const SimpleGraph& g, const SearchOptions& opts = {}) {
    ShapeVerdict verdict;
    if (g.n == 0) return verdict;
    auto comps = components(g);

    // cycle
    if (comps.size() == 1) {
        if (auto cyc = detail::trace_cycle(g, comps[0])) {
            if (detail::verify_cycles(g, {*cyc})) {
                verdict.kind = ShapeKind::cycle;
                verdict.n = g.n;
                verdict.cycles = {*cyc};
                return verdict;
            }
        }
    }

    // disjoint cycles of equal length
    if (comps.size() >= 2) {
        std::vector<std::vector<int>> cycles;
        bool ok = true;
        for (const auto& comp : comps) {
            auto cyc = detail::trace_cycle(g, comp);
            if (!cyc || (!cycles.empty() && cyc->size() != cycles[0].size())) {
                ok = false;
                break;
            }
            cycles.push_back(*cyc);
        }
        if (ok && detail::verify_cycles(g, cycles)) {
            verdict.kind = ShapeKind::disjoint_cycles;
            verdict.k = int(cycles.size());
            verdict.n = int(cycles[0].size());
            verdict.cycles = std::move(cycles);
            return verdict;
        }
    }

    // complete graph minus a perfect matching
    if (g.n >= 4 && g.n % 2 == 0) {
        std::vector<std::pair<int, int>> matching;
        bool ok = true;
        std::vector<char> matched(std::size_t(g.n), 0);
        for (int v = 0; v < g.n && ok; ++v) {
            if (matched[std::size_t(v)]) continue;
            int partner = -1;
            for (int w = 0; w < g.n; ++w)
                if (w != v && !g.edge(v, w)) {
                    if (partner >= 0 || matched[std::size_t(w)]) ok = false;
                    partner = w;
                }
            if (partner < 0) ok = false;
            if (ok) {
                matched[std::size_t(v)] = matched[std::size_t(partner)] = 1;
                matching.push_back({v, partner});
            }
        }
        if (ok) {
            // certificate check: edge iff distinct and not matched
            for (int u = 0; u < g.n && ok; ++u)
                for (int w = u + 1; w < g.n && ok; ++w) {
                    bool in_matching = false;
                    for (auto [a, b] : matching)
                        if (a == u && b == w) in_matching = true;
                    ok = g.edge(u, w) == !in_matching;
                }
            if (ok) {
                verdict.kind = ShapeKind::complete_minus_matching;
                verdict.n = g.n;
                verdict.matching = std::move(matching);
                return verdict;
            }
        }
    }

    // C_n[2K1]: twin classes of size exactly two whose quotient is a cycle
    if (g.n >= 6 && g.n % 2 == 0) {
        std::map<std::vector<std::uint64_t>, std::vector<int>> by_row;
        for (int v = 0; v < g.n; ++v)
            by_row[{g.adj[std::size_t(v)]}].push_back(v);
        bool ok = by_row.size() == std::size_t(g.n) / 2;
        std::vector<std::array<int, 2>> classes;
        std::vector<int> class_of(std::size_t(g.n), -1);
        if (ok)
            for (auto& [row, verts] : by_row) {
                if (verts.size() != 2) {
                    ok = false;
                    break;
                }
                class_of[std::size_t(verts[0])] = int(classes.size());
                class_of[std::size_t(verts[1])] = int(classes.size());
                classes.push_back({verts[0], verts[1]});
            }
        if (ok) {
            SimpleGraph quotient(int(classes.size()));
            for (int u = 0; u < g.n; ++u)
                for (int w = u + 1; w < g.n; ++w)
                    if (g.edge(u, w) && class_of[std::size_t(u)] != class_of[std::size_t(w)] &&
                        !quotient.edge(class_of[std::size_t(u)], class_of[std::size_t(w)]))
                        quotient.add_edge(class_of[std::size_t(u)], class_of[std::size_t(w)]);
            ShapeVerdict q = recognize_shape(quotient, opts);
            if (q.kind == ShapeKind::cycle) {
                // expected adjacency: co-edge inside a class, complete
                // between consecutive classes, nothing else
                SimpleGraph expect(g.n);
                const auto& order = q.cycles[0];
                for (std::size_t i = 0; i < order.size(); ++i) {
                    auto& c1 = classes[std::size_t(order[i])];
                    auto& c2 = classes[std::size_t(order[(i + 1) % order.size()])];
                    for (int a : c1)
                        for (int b : c2) expect.add_edge(a, b);
                }
                if (expect.adj == g.adj) {
                    verdict.kind = ShapeKind::lex_cycle_2k1;
                    verdict.n = int(classes.size());
                    for (int ci : order) verdict.twin_classes.push_back(classes[std::size_t(ci)]);
                    return verdict;
                }
            }
        }
    }

    // Petersen
    if (g.n == 10 && g.degree_sequence() == std::vector<int>(10, 3)) {
        if (auto iso = find_isomorphism(g, petersen_graph(), opts)) {
            verdict.kind = ShapeKind::petersen;
            verdict.n = 10;
            verdict.petersen_map = *iso;
            return verdict;
        }
    }

    return verdict;
}

}  // namespace tscay
