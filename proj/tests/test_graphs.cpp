#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tscay/graph_search.hpp"
#include "tscay/shapes.hpp"
#include "tscay/simple_graph.hpp"

using namespace tscay;

namespace {

SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g(a.n + b.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j)
            if (a.edge(i, j)) g.add_edge(i, j);
    for (int i = 0; i < b.n; ++i)
        for (int j = i + 1; j < b.n; ++j)
            if (b.edge(i, j)) g.add_edge(a.n + i, a.n + j);
    return g;
}

SimpleGraph relabel(const SimpleGraph& g, const Perm& p) {
    SimpleGraph out(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.edge(i, j)) out.add_edge(p[std::size_t(i)], p[std::size_t(j)]);
    return out;
}

}  // namespace

TEST_CASE("simple graph basics", "[graphs]") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    REQUIRE(g.edge(1, 0));
    REQUIRE_FALSE(g.edge(0, 2));
    REQUIRE(g.degree(0) == 1);
    REQUIRE(g.edge_count() == 2);
    REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);

    auto comps = components(g);
    REQUIRE(comps == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    REQUIRE_FALSE(is_connected(g));
    REQUIRE(is_connected(cycle_graph(5)));

    SimpleGraph sub = induced_subgraph(g, {2, 3});
    REQUIRE(sub.n == 2);
    REQUIRE(sub.edge(0, 1));

    REQUIRE(complete_graph(4).degree_sequence() == std::vector<int>{3, 3, 3, 3});
}

TEST_CASE("petersen fixture is the Kneser graph on 2-subsets", "[graphs]") {
    SimpleGraph p = petersen_graph();
    REQUIRE(p.n == 10);
    REQUIRE(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) REQUIRE(p.degree(v) == 3);
    // girth 5: no triangles, no 4-cycles
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            int common = 0;
            for (int c = 0; c < 10; ++c)
                if (p.edge(a, c) && p.edge(b, c)) ++common;
            if (p.edge(a, b)) REQUIRE(common == 0);  // no triangle
            else REQUIRE(common <= 1);               // no 4-cycle
        }
    REQUIRE(p.labels[0] == "{1,2}");
}

TEST_CASE("shape recognition certificates", "[graphs]") {
    ShapeVerdict c12 = recognize_shape(cycle_graph(12));
    REQUIRE(c12.kind == ShapeKind::cycle);
    REQUIRE(c12.n == 12);
    REQUIRE(c12.describe() == "C12");
    // the certificate cycle really walks edges and covers every vertex
    REQUIRE(c12.cycles.size() == 1);
    const auto& cyc = c12.cycles[0];
    REQUIRE(int(cyc.size()) == 12);
    SimpleGraph host = cycle_graph(12);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        REQUIRE(host.edge(cyc[i], cyc[(i + 1) % cyc.size()]));

    ShapeVerdict two_hex = recognize_shape(disjoint_union(cycle_graph(6), cycle_graph(6)));
    REQUIRE(two_hex.kind == ShapeKind::disjoint_cycles);
    REQUIRE(two_hex.k == 2);
    REQUIRE(two_hex.n == 6);
    REQUIRE(two_hex.describe() == "2 x C6");

    SimpleGraph k6pm(6);  // K6 with the matching {0,3}, {1,4}, {2,5} left out
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j - i != 3) k6pm.add_edge(i, j);
    ShapeVerdict pm = recognize_shape(k6pm);
    REQUIRE(pm.kind == ShapeKind::complete_minus_matching);
    REQUIRE(pm.n == 6);
    REQUIRE(pm.matching == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});

    // C6[2K1]: classes {2i, 2i+1}, full joins between consecutive classes
    SimpleGraph lex(12);
    for (int i = 0; i < 6; ++i)
        for (int x : {2 * i, 2 * i + 1})
            for (int y : {2 * ((i + 1) % 6), 2 * ((i + 1) % 6) + 1}) lex.add_edge(x, y);
    ShapeVerdict lx = recognize_shape(lex);
    REQUIRE(lx.kind == ShapeKind::lex_cycle_2k1);
    REQUIRE(lx.n == 6);
    REQUIRE(lx.twin_classes.size() == 6);
    REQUIRE(lx.describe() == "C6[2K1]");

    ShapeVerdict pet = recognize_shape(petersen_graph());
    REQUIRE(pet.kind == ShapeKind::petersen);
    // certificate: the stored map is an isomorphism onto the fixture
    SimpleGraph fixture = petersen_graph();
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v)
            REQUIRE(fixture.edge(u, v) ==
                    fixture.edge(pet.petersen_map[std::size_t(u)],
                                 pet.petersen_map[std::size_t(v)]));

    REQUIRE(recognize_shape(complete_graph(4)).kind == ShapeKind::none);
    SimpleGraph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    REQUIRE(recognize_shape(path).kind == ShapeKind::none);
    REQUIRE(recognize_shape(SimpleGraph(1)).kind == ShapeKind::none);
    REQUIRE(recognize_shape(cycle_graph(3)).kind == ShapeKind::cycle);
}

TEST_CASE("automorphism groups of known graphs", "[graphs]") {
    REQUIRE(automorphism_group(cycle_graph(6)).size() == 12);    // dihedral
    REQUIRE(automorphism_group(complete_graph(4)).size() == 24); // symmetric
    REQUIRE(automorphism_group(petersen_graph()).size() == 120);
    // every returned map is checked to be an automorphism
    SimpleGraph c5 = cycle_graph(5);
    for (const Perm& p : automorphism_group(c5)) {
        REQUIRE(is_permutation(p));
        for (int u = 0; u < 5; ++u)
            for (int v = 0; v < 5; ++v)
                REQUIRE(c5.edge(u, v) == c5.edge(p[std::size_t(u)], p[std::size_t(v)]));
    }
}

TEST_CASE("orbits and vertex transitivity", "[graphs]") {
    SimpleGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    REQUIRE(automorphism_mapping(path, 0, 2).has_value());
    REQUIRE_FALSE(automorphism_mapping(path, 0, 1).has_value());
    auto orbits = automorphism_orbits(path);
    REQUIRE(orbits == std::vector<std::vector<int>>{{0, 2}, {1}});
    REQUIRE_FALSE(is_vertex_transitive(path));

    REQUIRE(is_vertex_transitive(cycle_graph(7)));
    REQUIRE(automorphism_orbits(cycle_graph(7)).size() == 1);
}

TEST_CASE("isomorphism search with verification", "[graphs]") {
    std::mt19937 rng(3);
    SimpleGraph c6 = cycle_graph(6);
    Perm shuffle_map = identity_perm(6);
    std::shuffle(shuffle_map.begin(), shuffle_map.end(), rng);
    SimpleGraph c6_relabelled = relabel(c6, shuffle_map);
    auto iso = find_isomorphism(c6, c6_relabelled);
    REQUIRE(iso.has_value());
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
            REQUIRE(c6.edge(u, v) ==
                    c6_relabelled.edge((*iso)[std::size_t(u)], (*iso)[std::size_t(v)]));

    // same degree sequence, different graphs: refinement cannot separate
    // these, the search itself must
    SimpleGraph two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
    REQUIRE_FALSE(find_isomorphism(c6, two_triangles).has_value());
    REQUIRE_FALSE(graphs_isomorphic(c6, two_triangles));
    REQUIRE(graphs_isomorphic(complete_graph(4), complete_graph(4)));
    REQUIRE_FALSE(graphs_isomorphic(complete_graph(4), cycle_graph(4)));
    REQUIRE_FALSE(graphs_isomorphic(complete_graph(4), complete_graph(5)));
}

TEST_CASE("permutation closure", "[graphs]") {
    Perm t{1, 0, 2};    // (0 1)
    Perm c{1, 2, 0};    // (0 1 2)
    auto s3 = perm_closure({t, c});
    REQUIRE(s3.has_value());
    REQUIRE(s3->size() == 6);

    Perm t5{1, 0, 2, 3, 4};
    Perm c5{1, 2, 3, 4, 0};
    auto s5 = perm_closure({t5, c5});
    REQUIRE(s5.has_value());
    REQUIRE(s5->size() == 120);
    REQUIRE_FALSE(perm_closure({t5, c5}, 100).has_value());  // cap honoured
}

TEST_CASE("regular-subgroup search certifies Cayley-ness", "[graphs]") {
    auto on_c6 = sabidussi_regular_subgroup(cycle_graph(6));
    REQUIRE(on_c6.has_value());
    REQUIRE(on_c6->elements.size() == 6);
    // regularity: transitive with trivial stabilisers means exactly one
    // element maps 0 to each vertex
    std::vector<int> image_count(6, 0);
    for (const Perm& p : on_c6->elements) ++image_count[std::size_t(p[0])];
    REQUIRE(image_count == std::vector<int>(6, 1));

    REQUIRE(sabidussi_regular_subgroup(complete_graph(4)).has_value());

    // the classic negative: Petersen is vertex-transitive but not Cayley
    REQUIRE_FALSE(sabidussi_regular_subgroup(petersen_graph()).has_value());

    // not vertex-transitive: rejected before any search
    SimpleGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    REQUIRE_FALSE(sabidussi_regular_subgroup(path).has_value());
}

TEST_CASE("search budget surfaces as an exception", "[graphs]") {
    SearchOptions tiny;
    tiny.node_budget = 1;
    REQUIRE_THROWS_AS(automorphism_group(cycle_graph(12), tiny), SearchBudgetExceeded);
}
