#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <sstream>

#include "tscay/graph_export.hpp"
#include "tscay/group_automorphisms.hpp"
#include "tscay/iso.hpp"
#include "tscay/jobs.hpp"
#include "tscay/spec_lang.hpp"

using namespace tscay;

namespace {

ConnectionPair pair_of(const FiniteGroup& g, const std::string& l, const std::string& r) {
    return ConnectionPair(g, parse_element_set(g, l), parse_element_set(g, r));
}

ElementSet random_set(const FiniteGroup& g, std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::uniform_int_distribution<int> elt_dist(0, g.order() - 1);
    ElementSet s(g);
    int target = size_dist(rng);
    while (s.size() < target) s.insert(elt_dist(rng));
    return s;
}

}  // namespace

TEST_CASE("group automorphism tables", "[jobs]") {
    FiniteGroup c12 = make_cyclic(12);
    REQUIRE(tabulated_automorphisms(c12).size() == 4);  // units mod 12

    FiniteGroup d6 = make_dihedral(6);
    std::vector<Perm> auts = tabulated_automorphisms(d6);
    REQUIRE(auts.size() == 12);  // gcd(k,6)=1 twice, m in 0..5
    for (const Perm& s : auts) REQUIRE_NOTHROW(require_group_automorphism(d6, s));

    FiniteGroup s3 = make_symmetric(3);
    REQUIRE(tabulated_automorphisms(s3).size() == 6);  // inner = all of Aut(S3)
    REQUIRE(inner_automorphisms(s3).size() == 6);
    REQUIRE(inner_automorphisms(make_cyclic(5)).size() == 1);

    Perm bad = identity_perm(6);
    std::swap(bad[0], bad[1]);
    REQUIRE_THROWS_AS(require_group_automorphism(s3, bad), NotAnAutomorphism);
}

TEST_CASE("swap, conjugation and relabelling isomorphisms verify", "[jobs]") {
    std::mt19937 rng(17);
    std::vector<FiniteGroup> groups{make_dihedral(6), make_symmetric(3), make_quaternion(),
                                    make_cyclic(12)};
    int verified = 0;
    for (int t = 0; t < 5000 && verified < 30; ++t) {
        const FiniteGroup& g = groups[t % groups.size()];
        ConnectionPair p(g, random_set(g, rng, 3), random_set(g, rng, 3));
        if (!check_property(p).overall) continue;
        ++verified;

        IsoWitness sw = iso_swap(p);  // construction verifies arc-for-arc
        REQUIRE(sw.image_pair.left() == p.right());
        REQUIRE(sw.image_pair.right() == p.left());
        REQUIRE(check_property(sw.image_pair).overall);

        std::uniform_int_distribution<int> elt(0, g.order() - 1);
        int x = elt(rng), y = elt(rng);
        IsoWitness tr = iso_translate(p, x, y);
        REQUIRE(tr.image_pair.left() == p.left().conjugated(x));
        REQUIRE(tr.image_pair.right() == p.right().conjugated(y));
        REQUIRE(check_property(tr.image_pair).overall);

        std::vector<Perm> auts = tabulated_automorphisms(g);
        const Perm& sigma = auts[std::size_t(t) % auts.size()];
        IsoWitness sg = iso_sigma(p, sigma);
        REQUIRE(check_property(sg.image_pair).overall);
        for (int v : p.left().elements())
            REQUIRE(sg.image_pair.left().contains(sigma[std::size_t(v)]));
    }
    REQUIRE(verified == 30);
}

TEST_CASE("isomorphism images compose with the stated vertex rules", "[jobs]") {
    FiniteGroup d6 = make_dihedral(6);
    ConnectionPair p = pair_of(d6, "a,a^2", "b,a^3*b");

    IsoWitness sw = iso_swap(p);
    for (int v = 0; v < 12; ++v) REQUIRE(sw.phi.forward[std::size_t(v)] == d6.inv(v));
    REQUIRE(sw.phi.rule.find("g^-1") != std::string::npos);

    int x = parse_element(d6, "a*b"), y = parse_element(d6, "a^2");
    IsoWitness tr = iso_translate(p, x, y);
    for (int v = 0; v < 12; ++v)
        REQUIRE(tr.phi.forward[std::size_t(v)] == d6.mul(d6.mul(d6.inv(x), v), y));

    REQUIRE_THROWS_AS(iso_translate(p, -1, 0), std::out_of_range);
}

TEST_CASE("product fold isomorphism", "[jobs]") {
    FiniteGroup prod = parse_group_spec("S3xS3");

    ProductFoldResult fold =
        product_fold_isomorphism(pair_of(prod, "((12),e)", "(e,(12))"));
    // phi is the involution (g1, g2) -> (g1, g2^-1)
    for (int v = 0; v < 36; ++v)
        REQUIRE(fold.phi.forward[std::size_t(fold.phi.forward[std::size_t(v)])] == v);
    REQUIRE(fold.cayley_set.size() == 1);

    ProductFoldResult fold2 =
        product_fold_isomorphism(pair_of(prod, "((123),e),((132),e)", "(e,(123)),(e,(132))"));
    REQUIRE(fold2.cayley_set.size() == 4);

    // guards: not a product group; sets off the factors; punctured
    // subgroup shape violated
    FiniteGroup d6 = make_dihedral(6);
    REQUIRE_THROWS_AS(product_fold_isomorphism(pair_of(d6, "a*b", "b")), std::invalid_argument);
    REQUIRE_THROWS_AS(product_fold_isomorphism(pair_of(prod, "((12),(12))", "(e,(12))")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(product_fold_isomorphism(pair_of(prod, "((12),e),((123),e)", "(e,(12))")),
                      std::invalid_argument);
}

TEST_CASE("dot and json export", "[jobs]") {
    FiniteGroup s3 = make_symmetric(3);
    TwoSidedCayleyGraph simple = build_graph(pair_of(s3, "e,(12)", "(123),(132)"));
    std::string dot = to_dot(simple);
    REQUIRE(dot.find("graph ") != std::string::npos);
    REQUIRE(dot.find("--") != std::string::npos);
    REQUIRE(dot.find("digraph") == std::string::npos);
    REQUIRE(dot.find("(1 2 3)") != std::string::npos);

    FiniteGroup c4 = make_cyclic(4);
    TwoSidedCayleyGraph defective = build_graph(pair_of(c4, "a,a^3", "a,a^3"));
    std::string bad_dot = to_dot(defective);
    REQUIRE(bad_dot.find("digraph") != std::string::npos);

    nlohmann::json j = graph_to_json(simple);
    REQUIRE(j["group"] == "S3");
    REQUIRE(j["order"] == 6);
    REQUIRE(j["simple"] == true);
    REQUIRE(j["arcs"].size() == 24);  // 6 vertices * valency 4
    REQUIRE(j["L"].size() == 2);
    for (const auto& arc : j["arcs"]) {
        REQUIRE(arc.contains("source"));
        REQUIRE(arc.contains("target"));
        REQUIRE(arc.contains("l"));
        REQUIRE(arc.contains("r"));
    }
    REQUIRE(graph_to_json(defective)["simple"] == false);
}

TEST_CASE("worked examples all pass", "[jobs]") {
    ExamplesReport rep = run_examples();
    for (const ClaimResult& c : rep.claims) {
        INFO(c.scenario << ": " << c.claim << " " << c.detail);
        CHECK(c.pass);
    }
    REQUIRE(rep.all_pass());
    REQUIRE(rep.claims.size() >= 60);
}

TEST_CASE("petersen scan visits the full pair space and finds nothing", "[jobs]") {
    PetersenSearchReport rep = petersen_search();
    REQUIRE(rep.scans.size() == 2);
    // ordered pairs with |L| * |R| = 3 over a group of order 10:
    // 10 * C(10,3) singles-times-triples each way
    REQUIRE(rep.scans[0].group == "C10");
    REQUIRE(rep.scans[0].pairs_scanned == 2400);
    REQUIRE(rep.scans[0].with_property == 80);
    REQUIRE(rep.scans[0].connected_candidates == 80);
    REQUIRE(rep.scans[0].cayley_confirmed == 80);
    REQUIRE(rep.scans[1].group == "D5");
    REQUIRE(rep.scans[1].pairs_scanned == 2400);
    REQUIRE(rep.scans[1].with_property == 60);
    REQUIRE(rep.scans[1].connected_candidates == 60);
    REQUIRE(rep.scans[1].cayley_confirmed == 60);
    REQUIRE(rep.total_hits() == 0);
}

TEST_CASE("census counts, rows and guards", "[jobs]") {
    CensusOptions opts;
    opts.max_order = 6;
    std::ostringstream rows;
    nlohmann::json summary = census(opts, rows);

    std::map<std::string, nlohmann::json> by_group;
    for (const auto& row : summary) by_group[row["group"]] = row;
    REQUIRE(by_group.size() == 8);  // C2..C6, D2, D3, S3
    REQUIRE(by_group["C2"]["with_property"] == 2);
    REQUIRE(by_group["C3"]["with_property"] == 6);
    REQUIRE(by_group["C4"]["with_property"] == 20);
    REQUIRE(by_group["C5"]["with_property"] == 30);
    REQUIRE(by_group["C6"]["with_property"] == 78);
    REQUIRE(by_group["D3"]["with_property"] == 44);
    REQUIRE(by_group["S3"]["with_property"] == 44);
    REQUIRE(by_group["C4"]["connected"] == 16);
    REQUIRE(by_group["C4"]["cayley_true"] == 20);
    REQUIRE(by_group["C4"]["vt_true"] == 20);

    // every emitted row parses and has the fixed shape
    std::istringstream in(rows.str());
    std::string line;
    long parsed = 0;
    while (std::getline(in, line)) {
        nlohmann::json row = nlohmann::json::parse(line);
        ++parsed;
        REQUIRE(row.contains("group"));
        REQUIRE(row.contains("L"));
        REQUIRE(row.contains("R"));
        REQUIRE(row.contains("valency"));
        REQUIRE(row.contains("connected"));
        REQUIRE(row.contains("cayley"));
        REQUIRE(row.contains("vertex_transitive"));
    }
    long expected = 0;
    for (const auto& row : summary) expected += row["with_property"].get<long>();
    REQUIRE(parsed == expected);

    // inverse-closed restriction shrinks the space
    CensusOptions closed = opts;
    closed.inverse_closed_only = true;
    std::ostringstream rows2;
    nlohmann::json closed_summary = census(closed, rows2);
    for (const auto& row : closed_summary) {
        auto open_row = by_group[row["group"]];
        REQUIRE(row["pairs"].get<long>() <= open_row["pairs"].get<long>());
    }

    CensusOptions too_big;
    too_big.max_order = 30;
    std::ostringstream sink;
    REQUIRE_THROWS_AS(census(too_big, sink), std::invalid_argument);
    too_big.force = true;
    // with force it is legal (not run here: order 30 would be slow)

    CensusOptions tiny;
    tiny.max_order = 1;
    REQUIRE_THROWS_AS(census(tiny, sink), std::invalid_argument);
}

TEST_CASE("census at order 12 reproduces the dihedral landmarks", "[jobs]") {
    CensusOptions opts;
    opts.max_order = 12;
    std::ostringstream rows;
    nlohmann::json summary = census(opts, rows);

    // the order-12 dihedral group is the only group up to order 12 with
    // non-vertex-transitive two-sided Cayley graphs
    long vt_false_total = 0;
    for (const auto& row : summary) {
        if (row["group"] != "D6") REQUIRE(row["vt_false"] == 0);
        vt_false_total += row["vt_false"].get<long>();
    }
    REQUIRE(vt_false_total > 0);

    FiniteGroup d6 = make_dihedral(6);
    ElementSet blown_L = parse_element_set(d6, "a,a^2");
    ElementSet blown_R = parse_element_set(d6, "b,a^3*b");
    ElementSet split_L = parse_element_set(d6, "a*b,a^3,e");
    ElementSet split_R = parse_element_set(d6, "b");
    bool saw_blown = false, saw_split = false;
    std::istringstream in(rows.str());
    std::string line;
    while (std::getline(in, line)) {
        nlohmann::json row = nlohmann::json::parse(line);
        if (row["group"] != "D6") continue;
        auto row_set = [&](const nlohmann::json& names) {
            ElementSet s(d6);
            for (const auto& name : names) s.insert(parse_element(d6, name.get<std::string>()));
            return s;
        };
        ElementSet L = row_set(row["L"]);
        ElementSet R = row_set(row["R"]);
        if (L == blown_L && R == blown_R) {
            saw_blown = true;
            REQUIRE(row["valency"] == 4);
            REQUIRE(row["connected"] == true);
            REQUIRE(row["cayley"] == true);
            REQUIRE(row["vertex_transitive"] == true);
        }
        if (L == split_L && R == split_R) {
            saw_split = true;
            REQUIRE(row["valency"] == 3);
            REQUIRE(row["connected"] == false);
            REQUIRE(row["vertex_transitive"] == false);
        }
    }
    REQUIRE(saw_blown);
    REQUIRE(saw_split);
}
