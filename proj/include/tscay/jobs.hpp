#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tscay/analysis.hpp"
#include "tscay/connection.hpp"
#include "tscay/graph_search.hpp"
#include "tscay/iso.hpp"
#include "tscay/report.hpp"
#include "tscay/shapes.hpp"
#include "tscay/spec_lang.hpp"

namespace tscay {

/// One checked claim from the worked-example suite.
struct ClaimResult {
    std::string scenario;
    std::string claim;
    bool pass;
    std::string detail;  // filled on failure
};

struct ExamplesReport {
    std::vector<ClaimResult> claims;
    bool all_pass() const {
        for (const auto& c : claims)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline void claim(ExamplesReport& rep, const std::string& scenario, const std::string& text,
                  bool ok, std::string detail_on_fail = "") {
    rep.claims.push_back({scenario, text, ok, ok ? "" : std::move(detail_on_fail)});
}

inline std::vector<int> component_sizes(const std::vector<std::vector<int>>& comps) {
    std::vector<int> out;
    for (const auto& c : comps) out.push_back(int(c.size()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Re-derive every claim of the worked examples this toolkit ships with.
/// Each claim is checked from scratch at call time; nothing is cached.
inline ExamplesReport run_examples() {
    ExamplesReport rep;

    {  // dihedral pair whose graph is a blown-up 6-cycle
        const std::string sc = "d6-blown-up-cycle";
        FiniteGroup g = make_dihedral(6);
        ConnectionPair p(g, parse_element_set(g, "a,a^2"), parse_element_set(g, "b,a^3*b"));
        PropertyVerdict prop = check_property(p);
        detail::claim(rep, sc, "pair property holds", prop.overall);
        detail::claim(rep, sc, "L is not inverse-closed", !p.left().is_inverse_closed());
        detail::claim(rep, sc, "R is inverse-closed", p.right().is_inverse_closed());

        TwoSidedCayleyGraph graph = build_graph(p);
        detail::claim(rep, sc, "graph is simple undirected",
                      graph.simple_flag() == SimpleFlag::simple_undirected);
        bool valency4 = true;
        for (int v = 0; v < graph.order(); ++v)
            valency4 = valency4 && graph.adjacency()[std::size_t(v)].count() == 4;
        detail::claim(rep, sc, "graph is 4-regular", valency4);

        CayleyVerdict cay = check_cayley_conditions(graph);
        detail::claim(rep, sc, "left-regular representation acts (via_GL)", cay.via_gl);

        ElementSet lr = product(p.left(), p.right());
        detail::claim(rep, sc, "LR = L^-1 R = R^-1 L",
                      lr == product(p.left().inverse(), p.right()) &&
                          lr == product(p.right().inverse(), p.left()));
        bool nbhd_lr = true;
        for (int v = 0; v < g.order(); ++v)
            nbhd_lr = nbhd_lr &&
                      graph.adjacency()[std::size_t(v)] == lr.translated(v, Side::left).bits();
        detail::claim(rep, sc, "neighbourhood of g is g*(LR) for every g", nbhd_lr);

        ShapeVerdict shape = recognize_shape(simple_view(graph));
        detail::claim(rep, sc, "shape is C6[2K1]",
                      shape.kind == ShapeKind::lex_cycle_2k1 && shape.n == 6,
                      "got " + shape.describe());

        auto reg = sabidussi_regular_subgroup(simple_view(graph));
        detail::claim(rep, sc, "graph is a Cayley graph (regular subgroup found)",
                      reg.has_value());

        TransitivityVerdict tv = check_transitivity(graph);
        detail::claim(rep, sc, "K = lambda(N(L), N(R)) is transitive", tv.k_transitive);
        detail::claim(rep, sc, "graph is vertex-transitive",
                      tv.vertex_transitive && *tv.vertex_transitive);
    }

    {  // symmetric-group pair giving K6 minus a perfect matching
        const std::string sc = "s3-complete-minus-matching";
        FiniteGroup g = make_symmetric(3);
        ConnectionPair p(g, parse_element_set(g, "e,(12)"), parse_element_set(g, "(123),(132)"));
        detail::claim(rep, sc, "pair property holds", check_property(p).overall);

        TwoSidedCayleyGraph graph = build_graph(p);
        ShapeVerdict shape = recognize_shape(simple_view(graph));
        detail::claim(rep, sc, "shape is K6 minus a perfect matching",
                      shape.kind == ShapeKind::complete_minus_matching && shape.n == 6,
                      "got " + shape.describe());
        bool matching_ok = shape.kind == ShapeKind::complete_minus_matching;
        if (matching_ok) {
            auto expect = std::vector<std::pair<int, int>>{
                {*g.element_by_name("e"), *g.element_by_name("(1 2)")},
                {*g.element_by_name("(2 3)"), *g.element_by_name("(1 3 2)")},
                {*g.element_by_name("(1 2 3)"), *g.element_by_name("(1 3)")}};
            for (auto [a, b] : expect) {
                bool found = false;
                for (auto [c, d] : shape.matching)
                    found = found || (a == c && b == d) || (a == d && b == c);
                matching_ok = matching_ok && found;
            }
        }
        detail::claim(rep, sc, "removed matching pairs e|(12), (23)|(132), (123)|(13)",
                      matching_ok);

        CayleyVerdict cay = check_cayley_conditions(graph);
        detail::claim(rep, sc, "right-regular representation acts (via_GR)", cay.via_gr);
        detail::claim(rep, sc, "graph equals Cay(G, LR)",
                      cay.cayley_connection_set &&
                          *cay.cayley_connection_set == product(p.left(), p.right()) &&
                          cay.connection_set_exact);

        IsoWitness swap = iso_swap(p);  // throws on any arc mismatch
        CayleyVerdict swapped_cay = check_cayley_conditions(swap.image_graph);
        detail::claim(rep, sc, "swapped pair (R, L) satisfies via_GL", swapped_cay.via_gl);
        ElementSet rl = product(p.right(), p.left());
        detail::claim(rep, sc, "swapped connection set is RL (up to inversion)",
                      swapped_cay.cayley_connection_set &&
                          *swapped_cay.cayley_connection_set == rl);
        bool left_cay = true;  // via_GL reads as neighbourhood(g) = g * (RL)
        for (int v = 0; v < g.order(); ++v)
            left_cay = left_cay && swap.image_graph.adjacency()[std::size_t(v)] ==
                                       rl.translated(v, Side::left).bits();
        detail::claim(rep, sc, "swapped neighbourhood of g is g*(RL) for every g", left_cay);

        auto aut = automorphism_group(simple_view(graph));
        detail::claim(rep, sc, "automorphism group has order 48", aut.size() == 48,
                      "got " + std::to_string(aut.size()));
    }

    {  // disconnected dihedral pair with non-isomorphic components
        const std::string sc = "d6-split-components";
        FiniteGroup g = make_dihedral(6);
        ConnectionPair p(g, parse_element_set(g, "a*b,a^3,e"), parse_element_set(g, "b"));
        detail::claim(rep, sc, "pair property holds", check_property(p).overall);

        TwoSidedCayleyGraph graph = build_graph(p);
        bool valency3 = true;
        for (int v = 0; v < graph.order(); ++v)
            valency3 = valency3 && graph.adjacency()[std::size_t(v)].count() == 3;
        detail::claim(rep, sc, "graph is 3-regular", valency3);

        ConnectivityVerdict conn = check_connectivity_criterion(p);
        detail::claim(rep, sc, "G is not <L><R>", !conn.factorization_holds);
        detail::claim(rep, sc, "components have sizes 4 and 8",
                      detail::component_sizes(conn.components) == std::vector<int>{4, 8});

        SimpleGraph sg = simple_view(graph);
        auto comps = components(sg);
        if (comps.size() == 2) {
            SimpleGraph small = induced_subgraph(sg, comps[0].size() == 4 ? comps[0] : comps[1]);
            bool complete = small.n == 4;
            for (int u = 0; u < small.n && complete; ++u)
                complete = small.degree(u) == 3;
            detail::claim(rep, sc, "small component is K4", complete);
        } else {
            detail::claim(rep, sc, "small component is K4", false, "wrong component count");
        }

        TransitivityVerdict tv = check_transitivity(graph);
        detail::claim(rep, sc, "K is not transitive", !tv.k_transitive);
        detail::claim(rep, sc, "graph is not vertex-transitive",
                      tv.vertex_transitive && !*tv.vertex_transitive);
        detail::claim(rep, sc, "Aut has exactly two vertex orbits",
                      tv.orbit_count && *tv.orbit_count == 2,
                      tv.orbit_count ? "got " + std::to_string(*tv.orbit_count) : "unknown");
    }

    {  // one reflection against the two rotations a, a^-1: parity decides
        const std::string sc = "dn-reflection-vs-rotations";
        for (int n = 3; n <= 8; ++n) {
            std::string tag = " (n=" + std::to_string(n) + ")";
            FiniteGroup g = make_dihedral(n);
            ElementSet L(g), R(g);
            L.insert(g.structure().gen_b);
            R.insert(g.structure().gen_a);
            R.insert(g.inv(g.structure().gen_a));
            ConnectionPair p(g, L, R);
            detail::claim(rep, sc, "pair property holds" + tag, check_property(p).overall);

            ConnectivityVerdict conn = check_connectivity_criterion(p);
            ParityReach pr = parity_reachability(g, R);
            detail::claim(rep, sc, "odd R-word spells e exactly when n is odd" + tag,
                          pr.odd[std::size_t(g.identity())] == (n % 2 == 1));

            TwoSidedCayleyGraph graph = build_graph(p);
            ShapeVerdict shape = recognize_shape(simple_view(graph));
            if (n % 2 == 1) {
                detail::claim(rep, sc, "connected single cycle of length 2n" + tag,
                              conn.connected() && shape.kind == ShapeKind::cycle &&
                                  shape.n == 2 * n,
                              "got " + shape.describe());
            } else {
                detail::claim(rep, sc, "two disjoint n-cycles" + tag,
                              !conn.connected() &&
                                  shape.kind == ShapeKind::disjoint_cycles &&
                                  shape.k == 2 && shape.n == n,
                              "got " + shape.describe());
                bool delta_ok = conn.delta_labels.has_value();
                if (delta_ok) {
                    const auto& d = *conn.delta_labels;
                    // C0 holds the even rotations and the odd reflections
                    for (int i = 0; i < n; ++i) {
                        delta_ok = delta_ok && d[std::size_t(i)] == (i % 2);
                        delta_ok = delta_ok && d[std::size_t(n + i)] == (1 - i % 2);
                    }
                }
                detail::claim(rep, sc,
                              "C0 = even rotations + odd-index reflections" + tag, delta_ok);
            }
        }
    }

    {  // punctured subgroups on the two factors of S3 x S3
        const std::string sc = "s3xs3-punctured-subgroups";
        FiniteGroup g = direct_product(make_symmetric(3), make_symmetric(3));

        // non-normal factors <(12)>: every translation condition fails,
        // yet the component-inversion map proves the graph is Cayley
        ConnectionPair p1(g, parse_element_set(g, "((12),e)"), parse_element_set(g, "(e,(12))"));
        detail::claim(rep, sc, "transposition pair: property holds", check_property(p1).overall);
        CayleyVerdict cay1 = check_cayley_conditions(build_graph(p1));
        detail::claim(rep, sc, "transposition pair: via_GR fails", !cay1.via_gr);
        detail::claim(rep, sc, "transposition pair: via_GL fails", !cay1.via_gl);
        detail::claim(rep, sc, "transposition pair: via_delta fails", !cay1.via_delta);
        detail::claim(rep, sc, "transposition pair: via_delta_prime fails",
                      !cay1.via_delta_prime);
        ProductFoldResult fold1 = product_fold_isomorphism(p1);  // throws unless verified
        detail::claim(rep, sc, "transposition pair: (g1,g2)->(g1,g2^-1) folds onto Cay(G,LR)",
                      fold1.cayley_set == product(p1.left(), p1.right()));

        // normal factors <(123)>: the same fold works, and normality makes
        // the translation conditions hold as well
        ConnectionPair p2(g, parse_element_set(g, "((123),e),((132),e)"),
                          parse_element_set(g, "(e,(123)),(e,(132))"));
        detail::claim(rep, sc, "3-cycle pair: property holds", check_property(p2).overall);
        detail::claim(rep, sc, "3-cycle pair: 36 vertices, valency 4",
                      g.order() == 36 && p2.left().size() * p2.right().size() == 4);
        CayleyVerdict cay2 = check_cayley_conditions(build_graph(p2));
        detail::claim(rep, sc, "3-cycle pair: normal factors make via_GR hold", cay2.via_gr);
        detail::claim(rep, sc, "3-cycle pair: normal factors make via_GL hold", cay2.via_gl);
        ProductFoldResult fold2 = product_fold_isomorphism(p2);
        detail::claim(rep, sc, "3-cycle pair: (g1,g2)->(g1,g2^-1) folds onto Cay(G,LR)",
                      fold2.cayley_set == product(p2.left(), p2.right()));
    }

    {  // a pair that fails the property: loops appear
        const std::string sc = "c4-failing-pair";
        FiniteGroup g = make_cyclic(4);
        ConnectionPair p(g, parse_element_set(g, "a,a^3"), parse_element_set(g, "a,a^3"));
        PropertyVerdict prop = check_property(p);
        detail::claim(rep, sc, "pair property fails", !prop.overall);
        detail::claim(rep, sc, "failure is condition 2 (loops)", !prop.cond2.pass);
        TwoSidedCayleyGraph graph = build_graph(p);
        DefectReport defects = scan_defects(graph);
        detail::claim(rep, sc, "graph is defective with loops",
                      graph.simple_flag() == SimpleFlag::defective && !defects.loops.empty());
    }

    return rep;
}

/// Exhaustive search over both groups of order 10 for two-sided Cayley
/// graphs of valency 3 isomorphic to the Petersen graph. There are none:
/// those groups are abelian or dihedral of twice-odd order, so connected
/// prime-valency two-sided graphs over them are always Cayley graphs,
/// and the Petersen graph is famously not.
struct PetersenSearchReport {
    struct GroupScan {
        std::string group;
        long pairs_scanned = 0;        // ordered (L,R) with |L|*|R| = 3
        long with_property = 0;
        long connected_candidates = 0; // simple + connected, i.e. prime valency 3
        long cayley_confirmed = 0;     // prime-valency outcome "cayley"
        long petersen_hits = 0;
    };
    std::vector<GroupScan> scans;
    long total_hits() const {
        long t = 0;
        for (const auto& s : scans) t += s.petersen_hits;
        return t;
    }
};

inline PetersenSearchReport petersen_search() {
    PetersenSearchReport rep;
    SimpleGraph petersen = petersen_graph();
    std::vector<FiniteGroup> groups;
    groups.push_back(make_cyclic(10));
    groups.push_back(make_dihedral(5));

    for (const FiniteGroup& g : groups) {
        PetersenSearchReport::GroupScan scan;
        scan.group = g.description();
        int n = g.order();

        // all subsets of size 1 and 3, as (size-1, size-3) and (size-3,
        // size-1) ordered pairs
        std::vector<ElementSet> singles, triples;
        for (int a = 0; a < n; ++a) singles.push_back(ElementSet::of(g, {a}));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) triples.push_back(ElementSet::of(g, {a, b, c}));

        auto consider = [&](const ElementSet& L, const ElementSet& R) {
            ++scan.pairs_scanned;
            ConnectionPair p(g, L, R);
            if (!check_property(p).overall) return;
            ++scan.with_property;
            TwoSidedCayleyGraph graph = build_graph(p);
            if (weak_components(graph).size() != 1) return;
            ++scan.connected_candidates;
            PrimeValencyReport pv = prime_valency_analysis(graph);
            if (pv.outcome == PrimeValencyReport::Outcome::cayley) ++scan.cayley_confirmed;
            if (find_isomorphism(simple_view(graph), petersen)) ++scan.petersen_hits;
        };
        for (const auto& s : singles)
            for (const auto& t : triples) {
                consider(s, t);
                consider(t, s);
            }
        rep.scans.push_back(std::move(scan));
    }
    return rep;
}

/// Census over a small catalogue of groups: enumerate connection pairs,
/// keep those with the pair property, and stream one JSON row per kept
/// pair. Unknown verdicts (budget exhausted) are null, never guessed.
struct CensusOptions {
    int max_order = 12;
    int max_set_size = 3;          // |L|, |R| bounds; the pair count explodes otherwise
    bool inverse_closed_only = false;
    bool force = false;            // allow max_order > 24
    AnalysisOptions analysis{.aut_vertex_cap = 40,
                             .search = SearchOptions{.node_budget = 2'000'000,
                                                     .max_group_size = 100'000}};
};

inline nlohmann::json census(const CensusOptions& opts, std::ostream& rows) {
    if (opts.max_order > 24 && !opts.force)
        throw std::invalid_argument("census above order 24 needs force=true");
    if (opts.max_order < 2) throw std::invalid_argument("census needs max_order >= 2");

    std::vector<FiniteGroup> groups;
    for (int n = 2; n <= opts.max_order; ++n) groups.push_back(make_cyclic(n));
    for (int k = 2; 2 * k <= opts.max_order; ++k) groups.push_back(make_dihedral(k));
    if (opts.max_order >= 6) groups.push_back(make_symmetric(3));
    if (opts.max_order >= 8) groups.push_back(make_quaternion());
    if (opts.max_order >= 24) groups.push_back(make_symmetric(4));

    nlohmann::json summary = nlohmann::json::array();
    for (const FiniteGroup& g : groups) {
        int n = g.order();
        std::vector<ElementSet> sets;
        // enumerate nonempty subsets of size <= max_set_size in index order
        std::vector<int> stack;
        auto emit = [&](const std::vector<int>& elems) {
            ElementSet s = ElementSet::of(g, elems);
            if (!opts.inverse_closed_only || s.is_inverse_closed()) sets.push_back(std::move(s));
        };
        std::function<void(int)> rec = [&](int start) {
            if (!stack.empty()) emit(stack);
            if (int(stack.size()) == opts.max_set_size) return;
            for (int v = start; v < n; ++v) {
                stack.push_back(v);
                rec(v + 1);
                stack.pop_back();
            }
        };
        rec(0);

        long pairs = 0, with_property = 0, connected = 0;
        long cayley_yes = 0, cayley_no = 0, cayley_unknown = 0;
        long vt_yes = 0, vt_no = 0, vt_unknown = 0;
        for (const ElementSet& L : sets)
            for (const ElementSet& R : sets) {
                ++pairs;
                ConnectionPair p(g, L, R);
                if (!check_property(p).overall) continue;
                ++with_property;
                TwoSidedCayleyGraph graph = build_graph(p);
                bool conn = weak_components(graph).size() == 1;
                if (conn) ++connected;

                CayleyVerdict cay = check_cayley_conditions(graph);
                nlohmann::json cayley_field;
                if (cay.any_translation()) {
                    cayley_field = true;
                } else if (n <= opts.analysis.aut_vertex_cap) {
                    try {
                        cayley_field =
                            sabidussi_regular_subgroup(simple_view(graph), opts.analysis.search)
                                .has_value();
                    } catch (const SearchBudgetExceeded&) {
                        cayley_field = nullptr;
                    }
                } else {
                    cayley_field = nullptr;
                }
                if (cayley_field.is_null()) ++cayley_unknown;
                else if (cayley_field.get<bool>()) ++cayley_yes;
                else ++cayley_no;

                nlohmann::json vt_field;
                if (n <= opts.analysis.aut_vertex_cap) {
                    try {
                        vt_field = is_vertex_transitive(simple_view(graph), opts.analysis.search);
                    } catch (const SearchBudgetExceeded&) {
                        vt_field = nullptr;
                    }
                } else {
                    vt_field = nullptr;
                }
                if (vt_field.is_null()) ++vt_unknown;
                else if (vt_field.get<bool>()) ++vt_yes;
                else ++vt_no;

                nlohmann::json row = {{"group", g.description()},
                                      {"L", detail::set_json(g, L)},
                                      {"R", detail::set_json(g, R)},
                                      {"valency", L.size() * R.size()},
                                      {"connected", conn},
                                      {"cayley", cayley_field},
                                      {"vertex_transitive", vt_field}};
                rows << row.dump() << "\n";
            }
        summary.push_back({{"group", g.description()},
                           {"pairs", pairs},
                           {"with_property", with_property},
                           {"connected", connected},
                           {"cayley_true", cayley_yes},
                           {"cayley_false", cayley_no},
                           {"cayley_unknown", cayley_unknown},
                           {"vt_true", vt_yes},
                           {"vt_false", vt_no},
                           {"vt_unknown", vt_unknown}});
    }
    return summary;
}

}  // namespace tscay
