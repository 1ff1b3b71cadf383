#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "tscay/analysis.hpp"
#include "tscay/connection.hpp"
#include "tscay/group_automorphisms.hpp"
#include "tscay/perm.hpp"

namespace tscay {

/// An explicit vertex bijection witnessing a graph isomorphism, with a
/// human-readable description of the rule that produced it.
struct VertexBijection {
    Perm forward;
    std::string rule;
};

/// One generic isomorphism: the image pair, its graph, and the verified
/// vertex bijection carrying the source graph onto the image graph.
struct IsoWitness {
    ConnectionPair image_pair;
    TwoSidedCayleyGraph image_graph;
    VertexBijection phi;
};

namespace detail {

/// Arc-for-arc verification of phi as an isomorphism between two graphs
/// on the same group order, and of the clause that the pair property (per
/// condition) transfers from source pair to image pair. Violations are
/// internal errors: these bijections are theorem-backed.
inline void verify_witness(const TwoSidedCayleyGraph& src, const ConnectionPair& image_pair,
                           const TwoSidedCayleyGraph& img, const Perm& phi,
                           const ConnectionPair& src_pair) {
    int n = src.order();
    if (int(phi.size()) != n || !is_permutation(phi))
        throw std::logic_error("isomorphism witness is not a vertex permutation");
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (src.has_arc(u, v) != img.has_arc(phi[std::size_t(u)], phi[std::size_t(v)]))
                throw std::logic_error("vertex bijection fails to carry arcs to arcs");
    PropertyVerdict a = check_property(src_pair), b = check_property(image_pair);
    if (a.cond1.pass != b.cond1.pass || a.cond2.pass != b.cond2.pass ||
        a.cond3.pass != b.cond3.pass)
        throw std::logic_error("pair property did not transfer along generic isomorphism");
}

}  // namespace detail

/// 2SCay(G;L,R) -> 2SCay(G;R,L) via g -> g^-1.
inline IsoWitness iso_swap(const ConnectionPair& p) {
    const FiniteGroup& g = p.group();
    ConnectionPair image = p.swapped();
    TwoSidedCayleyGraph src = build_graph(p), img = build_graph(image);
    Perm phi(std::size_t(g.order()));
    for (int v = 0; v < g.order(); ++v) phi[std::size_t(v)] = g.inv(v);
    detail::verify_witness(src, image, img, phi, p);
    return IsoWitness{std::move(image), std::move(img), {std::move(phi), "g -> g^-1"}};
}

/// 2SCay(G;L,R) -> 2SCay(G;L^x,R^y) via g -> x^-1 g y.
inline IsoWitness iso_translate(const ConnectionPair& p, int x, int y) {
    const FiniteGroup& g = p.group();
    if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
        throw std::out_of_range("translation elements out of range");
    ConnectionPair image(g, p.left().conjugated(x), p.right().conjugated(y));
    TwoSidedCayleyGraph src = build_graph(p), img = build_graph(image);
    Perm phi(std::size_t(g.order()));
    for (int v = 0; v < g.order(); ++v) phi[std::size_t(v)] = g.mul(g.mul(g.inv(x), v), y);
    detail::verify_witness(src, image, img, phi, p);
    return IsoWitness{std::move(image), std::move(img),
                      {std::move(phi), "g -> x^-1 g y with x = " + g.name(x) +
                                           ", y = " + g.name(y)}};
}

/// 2SCay(G;L,R) -> 2SCay(G;sigma(L),sigma(R)) via g -> sigma(g), for a
/// group automorphism sigma (validated; throws NotAnAutomorphism).
inline IsoWitness iso_sigma(const ConnectionPair& p, const Perm& sigma) {
    const FiniteGroup& g = p.group();
    require_group_automorphism(g, sigma);
    ElementSet sl(g), sr(g);
    for (int l : p.left().elements()) sl.insert(sigma[std::size_t(l)]);
    for (int r : p.right().elements()) sr.insert(sigma[std::size_t(r)]);
    ConnectionPair image(g, std::move(sl), std::move(sr));
    TwoSidedCayleyGraph src = build_graph(p), img = build_graph(image);
    detail::verify_witness(src, image, img, sigma, p);
    return IsoWitness{std::move(image), std::move(img), {sigma, "g -> sigma(g)"}};
}

/// For a direct product G = G1 x G2 with L = H1# x {e} and R = {e} x H2#
/// (punctured subgroups on either side), the two-sided graph is carried
/// onto the ordinary Cayley graph Cay(G, LR) by (g1, g2) -> (g1, g2^-1),
/// even though none of the translation conditions need hold.
struct ProductFoldResult {
    ElementSet cayley_set;  // LR
    VertexBijection phi;    // an involution
};

inline ProductFoldResult product_fold_isomorphism(const ConnectionPair& p) {
    const FiniteGroup& g = p.group();
    const GroupStructure& st = g.structure();
    if (st.kind != GroupKind::product)
        throw std::invalid_argument("product fold needs a direct-product group");
    const FiniteGroup &g1 = *st.factor1, &g2 = *st.factor2;
    int n2 = g2.order();

    // L must be H1# x {e2} and R must be {e1} x H2# for subgroups Hi.
    ElementSet h1(g1), h2(g2);
    h1.insert(g1.identity());
    h2.insert(g2.identity());
    for (int l : p.left().elements()) {
        if (l % n2 != g2.identity())
            throw std::invalid_argument("left set is not contained in G1 x {e}");
        if (l / n2 == g1.identity())
            throw std::invalid_argument("left set contains the identity");
        h1.insert(l / n2);
    }
    for (int r : p.right().elements()) {
        if (r / n2 != g1.identity())
            throw std::invalid_argument("right set is not contained in {e} x G2");
        if (r % n2 == g2.identity())
            throw std::invalid_argument("right set contains the identity");
        h2.insert(r % n2);
    }
    if (!is_subgroup(h1) || !is_subgroup(h2))
        throw std::invalid_argument("connection sets are not punctured subgroups");

    TwoSidedCayleyGraph src = build_graph(p);
    ElementSet lr = product(p.left(), p.right());
    std::vector<Bitset> cay = cayley_adjacency(g, lr);

    Perm phi(std::size_t(g.order()));
    for (int a1 = 0; a1 < g1.order(); ++a1)
        for (int a2 = 0; a2 < n2; ++a2)
            phi[std::size_t(a1 * n2 + a2)] = a1 * n2 + g2.inv(a2);
    if (!is_identity(compose(phi, phi)))
        throw std::logic_error("component inversion is not an involution");

    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            if (src.has_arc(u, v) !=
                cay[std::size_t(phi[std::size_t(u)])].test(phi[std::size_t(v)]))
                throw std::logic_error("product fold failed to carry arcs onto Cay(G, LR)");

    return ProductFoldResult{std::move(lr), {std::move(phi), "(g1,g2) -> (g1,g2^-1)"}};
}

}  // namespace tscay
