#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "tscay/connection.hpp"
#include "tscay/spec_lang.hpp"

using namespace tscay;

namespace {

ElementSet random_set(const FiniteGroup& g, std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::uniform_int_distribution<int> elt_dist(0, g.order() - 1);
    ElementSet s(g);
    int target = size_dist(rng);
    while (s.size() < target) s.insert(elt_dist(rng));
    return s;
}

std::vector<FiniteGroup> small_groups() {
    return {make_cyclic(8),  make_cyclic(12),   make_dihedral(4), make_dihedral(6),
            make_symmetric(3), make_quaternion(), direct_product(make_cyclic(2), make_symmetric(3))};
}

}  // namespace

TEST_CASE("lambda maps act by g -> l^-1 g r", "[connection]") {
    FiniteGroup g = make_dihedral(6);
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        int l = int(rng() % 12), r = int(rng() % 12);
        ConnectionMap m = lambda_map(g, l, r);
        REQUIRE(is_permutation(m.image));
        for (int v = 0; v < 12; ++v)
            REQUIRE(m.image[std::size_t(v)] == g.mul(g.mul(g.inv(l), v), r));
    }
}

TEST_CASE("lambda composition multiplies the labels", "[connection]") {
    // (g) lambda_{x,y} lambda_{u,v} = (xu)^-1 g (yv), checked exhaustively
    FiniteGroup g = make_symmetric(3);
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y)
            for (int u = 0; u < 6; ++u)
                for (int v = 0; v < 6; ++v) {
                    Perm composite = compose(lambda_map(g, x, y).image, lambda_map(g, u, v).image);
                    REQUIRE(composite == lambda_map(g, g.mul(x, u), g.mul(y, v)).image);
                }
}

TEST_CASE("lambda inverse swaps to the inverse labels", "[connection]") {
    for (const FiniteGroup& g : {make_symmetric(3), make_dihedral(6)})
        for (int l = 0; l < g.order(); ++l)
            for (int r = 0; r < g.order(); ++r)
                REQUIRE(lambda_inverse(g, lambda_map(g, l, r)).image ==
                        inverse_perm(lambda_map(g, l, r).image));
}

TEST_CASE("lambda maps coincide exactly on central multiples", "[connection]") {
    // lambda_{l,r} = lambda_{u,v} iff u = xl, v = xr for a central x;
    // exhaustively on a group with nontrivial centre and one without
    for (const FiniteGroup& g : {make_dihedral(6), make_symmetric(3)}) {
        ElementSet z = center(g);
        int n = g.order();
        for (int l = 0; l < n; ++l)
            for (int r = 0; r < n; ++r) {
                Perm base = lambda_map(g, l, r).image;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        bool equal = base == lambda_map(g, u, v).image;
                        bool central_multiple = false;
                        for (int x : z.elements())
                            central_multiple = central_multiple ||
                                               (u == g.mul(x, l) && v == g.mul(x, r));
                        REQUIRE(equal == central_multiple);
                    }
            }
    }
}

TEST_CASE("connection set deduplicates central collisions", "[connection]") {
    FiniteGroup g = make_dihedral(6);  // centre {e, a^3}
    ConnectionPair p(g, parse_element_set(g, "a,a^4"), parse_element_set(g, "b,a^3*b"));
    // a^3 {a, a^4} = {a^4, a} and a^3 {b, a^3 b} = {a^3 b, b}: the four
    // (l, r) pairs give only two distinct maps
    std::vector<ConnectionMap> s = connection_set(p);
    REQUIRE(s.size() == 2);
    std::set<Perm> images;
    for (const auto& m : s) images.insert(m.image);
    REQUIRE(images.size() == 2);

    // no collisions without a central multiplier relating the labels
    ConnectionPair q(g, parse_element_set(g, "a,a^2"), parse_element_set(g, "b,a^3*b"));
    REQUIRE(connection_set(q).size() == 4);
}

TEST_CASE("property verdicts on the worked pairs", "[connection]") {
    FiniteGroup d6 = make_dihedral(6);
    REQUIRE(check_property(
                ConnectionPair(d6, parse_element_set(d6, "a,a^2"), parse_element_set(d6, "b,a^3*b")))
                .overall);

    // abelian L = R: condition 2 must fail with a loop witness
    FiniteGroup c4 = make_cyclic(4);
    PropertyVerdict v =
        check_property(ConnectionPair(c4, parse_element_set(c4, "a,a^3"),
                                      parse_element_set(c4, "a,a^3")));
    REQUIRE_FALSE(v.overall);
    REQUIRE_FALSE(v.cond2.pass);
    REQUIRE(v.cond2.witness.has_value());
    REQUIRE(c4.conj(v.cond2.witness->a, v.cond2.witness->g) == v.cond2.witness->b);

    // asymmetric pair: condition 1 fails
    PropertyVerdict v1 = check_property(
        ConnectionPair(d6, parse_element_set(d6, "a"), parse_element_set(d6, "b")));
    REQUIRE_FALSE(v1.cond1.pass);
    REQUIRE(v1.cond1.witness.has_value());

    // quaternion pair passing 1 and 2 but failing 3 at the central a^2
    FiniteGroup q8 = make_quaternion();
    PropertyVerdict v3 = check_property(
        ConnectionPair(q8, parse_element_set(q8, "a,a^3"), parse_element_set(q8, "b,a^2*b")));
    REQUIRE(v3.cond1.pass);
    REQUIRE(v3.cond2.pass);
    REQUIRE_FALSE(v3.cond3.pass);
    REQUIRE(v3.cond3.witness.has_value());
    REQUIRE(v3.cond3.witness->a == q8.power(q8.structure().gen_a, 2));
}

TEST_CASE("graph arcs match the defining double loop", "[connection]") {
    std::mt19937 rng(7);
    auto groups = small_groups();
    for (int t = 0; t < 50; ++t) {
        const FiniteGroup& g = groups[t % groups.size()];
        ConnectionPair p(g, random_set(g, rng, 3), random_set(g, rng, 3));
        TwoSidedCayleyGraph graph = build_graph(p);
        int n = g.order();
        // adjacency from nothing but mul and inv
        std::vector<std::vector<bool>> expect(n, std::vector<bool>(n, false));
        long arc_count = 0;
        for (int x = 0; x < n; ++x)
            for (int l : p.left().elements())
                for (int r : p.right().elements()) {
                    expect[std::size_t(x)][std::size_t(g.mul(g.mul(g.inv(l), x), r))] = true;
                    ++arc_count;
                }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                REQUIRE(graph.has_arc(x, y) == expect[std::size_t(x)][std::size_t(y)]);
        REQUIRE(long(graph.arcs().size()) == arc_count);
    }
}

TEST_CASE("conditions match the defect scan", "[connection]") {
    // cond1 <-> symmetric arcs, cond2 <-> no loops, and under cond1
    // cond3 <-> no multiple arcs: randomized, zero counterexamples
    std::mt19937 rng(42);
    auto groups = small_groups();
    int cond1_seen = 0;
    for (int t = 0; t < 200; ++t) {
        const FiniteGroup& g = groups[t % groups.size()];
        ConnectionPair p(g, random_set(g, rng, 3), random_set(g, rng, 3));
        PropertyVerdict v = check_property(p);
        DefectReport d = scan_defects(build_graph(p));
        REQUIRE(v.cond1.pass == d.symmetric);
        REQUIRE(v.cond2.pass == d.loops.empty());
        if (v.cond1.pass) {
            ++cond1_seen;
            REQUIRE(v.cond3.pass == d.multi_arcs.empty());
        }
        REQUIRE(v.overall == d.simple_undirected());
        TwoSidedCayleyGraph graph = build_graph(p);
        REQUIRE((graph.simple_flag() == SimpleFlag::simple_undirected) == v.overall);
    }
    REQUIRE(cond1_seen > 50);  // the suite actually exercised the implication
}

TEST_CASE("valency equals |L| * |R| on property pairs", "[connection]") {
    std::mt19937 rng(11);
    auto groups = small_groups();
    int verified = 0;
    for (int t = 0; t < 5000 && verified < 40; ++t) {
        const FiniteGroup& g = groups[t % groups.size()];
        ConnectionPair p(g, random_set(g, rng, 3), random_set(g, rng, 3));
        if (!check_property(p).overall) continue;
        ++verified;
        TwoSidedCayleyGraph graph = build_graph(p);
        int want = p.left().size() * p.right().size();
        for (int x = 0; x < g.order(); ++x)
            REQUIRE(int(graph.adjacency()[std::size_t(x)].count()) == want);
    }
    REQUIRE(verified == 40);
}

TEST_CASE("derangement conditions hold whenever the property does", "[connection]") {
    std::mt19937 rng(13);
    auto groups = small_groups();
    int verified = 0;
    for (int t = 0; t < 5000 && verified < 40; ++t) {
        const FiniteGroup& g = groups[t % groups.size()];
        ConnectionPair p(g, random_set(g, rng, 3), random_set(g, rng, 3));
        if (!check_property(p).overall) continue;
        ++verified;
        DerangementVerdict d = check_derangement_conditions(p);
        REQUIRE(d.hat1.pass);
        REQUIRE(d.hat1_identity.pass);
        REQUIRE(d.hat2.pass);
        REQUIRE(d.hat3.pass);
        REQUIRE(d.overall);
        for (const ConnectionMap& m : connection_set(p))
            REQUIRE_FALSE(has_fixed_point(m.image));
    }
    REQUIRE(verified == 40);
}

TEST_CASE("unique reverse pair and the identity-composite criterion", "[connection]") {
    // for each (l, r, x) exactly one (l', r') in L x R composes to fix x,
    // and the composite is the identity iff Ll and Rr meet the centre
    FiniteGroup g = make_dihedral(6);
    ConnectionPair p(g, parse_element_set(g, "a,a^2"), parse_element_set(g, "b,a^3*b"));
    ElementSet z = center(g);
    for (int l : p.left().elements())
        for (int r : p.right().elements()) {
            Perm lam = lambda_map(g, l, r).image;
            for (int x = 0; x < g.order(); ++x) {
                int hits = 0;
                bool identity_hit = false;
                for (int l2 : p.left().elements())
                    for (int r2 : p.right().elements()) {
                        Perm comp = compose(lam, lambda_map(g, l2, r2).image);
                        if (comp[std::size_t(x)] == x) {
                            ++hits;
                            identity_hit = is_identity(comp);
                        }
                    }
                REQUIRE(hits == 1);
                ElementSet ll = p.left().translated(l, Side::right);   // L l
                ElementSet rr = p.right().translated(r, Side::right);  // R r
                bool central_meet = ((ll & rr) & z).size() > 0;
                REQUIRE(identity_hit == central_meet);
            }
        }
}

TEST_CASE("pair construction guards", "[connection]") {
    FiniteGroup c4 = make_cyclic(4);
    FiniteGroup c5 = make_cyclic(5);
    REQUIRE_THROWS_AS(ConnectionPair(c4, ElementSet(c4), parse_element_set(c4, "a")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(ConnectionPair(c4, parse_element_set(c5, "a"), parse_element_set(c4, "a")),
                      std::invalid_argument);
    ConnectionPair p(c4, parse_element_set(c4, "a"), parse_element_set(c4, "a^2"));
    ConnectionPair s = p.swapped();
    REQUIRE(s.left() == p.right());
    REQUIRE(s.right() == p.left());
}
