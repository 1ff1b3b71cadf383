#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tscay/bitset.hpp"
#include "tscay/element_set.hpp"
#include "tscay/group.hpp"
#include "tscay/perm.hpp"

namespace tscay {

/// A group together with the two connection sets (L, R) of a two-sided
/// Cayley graph 2SCay(G; L, R). Both sets must be nonempty subsets of the
/// same group. No further condition is imposed here; whether the pair
/// yields a simple undirected graph is what check_property decides.
class ConnectionPair {
public:
    ConnectionPair(const FiniteGroup& g, ElementSet left, ElementSet right)
        : group_(&g), left_(std::move(left)), right_(std::move(right)) {
        if (&left_.group() != group_ || &right_.group() != group_)
            throw std::invalid_argument("connection sets belong to a different group");
        if (left_.empty() || right_.empty())
            throw std::invalid_argument("connection sets must be nonempty");
    }

    const FiniteGroup& group() const { return *group_; }
    const ElementSet& left() const { return left_; }
    const ElementSet& right() const { return right_; }

    /// The swapped pair (R, L).
    ConnectionPair swapped() const { return ConnectionPair(*group_, right_, left_); }

private:
    const FiniteGroup* group_;
    ElementSet left_;
    ElementSet right_;
};

/// The map lambda_{x,y} : g -> x^-1 g y, tabulated over the whole group.
struct ConnectionMap {
    int left_elt;
    int right_elt;
    Perm image;  // image[g] = x^-1 g y
};

inline ConnectionMap lambda_map(const FiniteGroup& g, int x, int y) {
    ConnectionMap m{x, y, Perm(std::size_t(g.order()))};
    int xi = g.inv(x);
    for (int v = 0; v < g.order(); ++v) m.image[std::size_t(v)] = g.mul(g.mul(xi, v), y);
    return m;
}

/// lambda_{x,y}^-1 = lambda_{x^-1, y^-1}.
inline ConnectionMap lambda_inverse(const FiniteGroup& g, const ConnectionMap& m) {
    return lambda_map(g, g.inv(m.left_elt), g.inv(m.right_elt));
}

/// lambda_{l,r} = lambda_{u,v} iff u = z*l and v = z*r for a central z.
/// This is the pointwise-equality test; the central-witness form is what
/// the dedup in connection_set and the tests lean on.
inline bool lambda_equal(const FiniteGroup& g, int l, int r, int u, int v) {
    int xi = g.inv(l), ui = g.inv(u);
    for (int w = 0; w < g.order(); ++w)
        if (g.mul(g.mul(xi, w), r) != g.mul(g.mul(ui, w), v)) return false;
    return true;
}

/// The connection set of maps, deduplicated: one ConnectionMap per distinct
/// map lambda_{l,r} with l in L, r in R, in (l, r) index order of first
/// occurrence. Distinct (l, r) pairs collide exactly when they differ by a
/// common central factor.
inline std::vector<ConnectionMap> connection_set(const ConnectionPair& p) {
    const FiniteGroup& g = p.group();
    std::vector<ConnectionMap> out;
    for (int l : p.left().elements())
        for (int r : p.right().elements()) {
            ConnectionMap m = lambda_map(g, l, r);
            bool dup = false;
            for (const auto& seen : out)
                if (seen.image == m.image) { dup = true; break; }
            if (!dup) out.push_back(std::move(m));
        }
    return out;
}

/// Witness for a failed condition. The slot meaning depends on the
/// condition; unused slots are -1. See each checker's comment.
struct ConditionWitness {
    int g = -1;
    int a = -1;
    int b = -1;
};

struct ConditionResult {
    bool pass = true;
    std::optional<ConditionWitness> witness;
};

/// Verdict of the three conditions that make 2SCay(G; L, R) a simple
/// undirected graph:
///   (1) L^-1 g R = L g R^-1 for all g      (arcs come in opposite pairs)
///   (2) L^g intersect R empty for all g    (no loops)
///   (3) (L L^-1)^g intersect R R^-1 = {e}  (no repeated arcs)
struct PropertyVerdict {
    ConditionResult cond1, cond2, cond3;
    bool overall = false;
};

/// Check the defining property of the pair. Witnesses:
///   cond1: g, a = an element in exactly one of L^-1 g R and L g R^-1
///   cond2: g, a = l in L, b = r in R with l^g = r
///   cond3: g, a = a non-identity element of (L L^-1)^g intersect R R^-1
inline PropertyVerdict check_property(const ConnectionPair& p) {
    const FiniteGroup& gr = p.group();
    const ElementSet &L = p.left(), &R = p.right();
    PropertyVerdict v;

    ElementSet Linv = L.inverse(), Rinv = R.inverse();
    for (int g = 0; g < gr.order() && v.cond1.pass; ++g) {
        ElementSet lhs = product(Linv, R.translated(g, Side::left));   // L^-1 g R
        ElementSet rhs = product(L.translated(g, Side::right), Rinv);  // L g R^-1
        if (!(lhs == rhs)) {
            v.cond1.pass = false;
            ElementSet diff = lhs | rhs;
            for (int x : diff.elements())
                if (lhs.contains(x) != rhs.contains(x)) {
                    v.cond1.witness = ConditionWitness{g, x, -1};
                    break;
                }
        }
    }

    for (int g = 0; g < gr.order() && v.cond2.pass; ++g) {
        ElementSet hit = L.conjugated(g) & R;
        if (!hit.empty()) {
            v.cond2.pass = false;
            for (int l : L.elements())
                if (R.contains(gr.conj(l, g))) {
                    v.cond2.witness = ConditionWitness{g, l, gr.conj(l, g)};
                    break;
                }
        }
    }

    ElementSet LLi = product(L, Linv), RRi = product(R, Rinv);
    ElementSet just_e(gr);
    just_e.insert(gr.identity());
    for (int g = 0; g < gr.order() && v.cond3.pass; ++g) {
        ElementSet hit = LLi.conjugated(g) & RRi;
        if (!(hit == just_e)) {
            v.cond3.pass = false;
            for (int x : hit.elements())
                if (x != gr.identity()) {
                    v.cond3.witness = ConditionWitness{g, x, -1};
                    break;
                }
        }
    }

    v.overall = v.cond1.pass && v.cond2.pass && v.cond3.pass;
    return v;
}

/// One labelled arc g -> l^-1 g r.
struct Arc {
    int source, target, l, r;
};

enum class SimpleFlag { unverified, simple_undirected, defective };

/// The two-sided Cayley graph itself: every labelled arc, plus a directed
/// adjacency matrix (one bitset row per vertex). Arcs are generated in
/// deterministic order: by source vertex, then by l, then by r (element
/// index order), so repeated builds are byte-identical.
class TwoSidedCayleyGraph {
public:
    TwoSidedCayleyGraph(const ConnectionPair& p)
        : group_(&p.group()), left_(p.left()), right_(p.right()) {
        const FiniteGroup& gr = *group_;
        int n = gr.order();
        adjacency_.assign(std::size_t(n), Bitset(n));
        arcs_.reserve(std::size_t(n) * left_.size() * right_.size());
        auto ls = left_.elements();
        auto rs = right_.elements();
        for (int g = 0; g < n; ++g)
            for (int l : ls)
                for (int r : rs) {
                    int target = gr.mul(gr.mul(gr.inv(l), g), r);
                    arcs_.push_back(Arc{g, target, l, r});
                    adjacency_[std::size_t(g)].set(target);
                }
    }

    const FiniteGroup& group() const { return *group_; }
    const ElementSet& left() const { return left_; }
    const ElementSet& right() const { return right_; }
    int order() const { return group_->order(); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Bitset>& adjacency() const { return adjacency_; }
    bool has_arc(int u, int v) const { return adjacency_[std::size_t(u)].test(v); }

    SimpleFlag simple_flag() const { return flag_; }
    void set_simple_flag(SimpleFlag f) { flag_ = f; }

private:
    const FiniteGroup* group_;
    ElementSet left_, right_;
    std::vector<Arc> arcs_;
    std::vector<Bitset> adjacency_;
    SimpleFlag flag_ = SimpleFlag::unverified;
};

/// A repeated arc: the (l, r) labels, in arc order, of all parallel arcs
/// from source to target (listed only when there are at least two).
struct MultiArc {
    int source, target;
    std::vector<std::pair<int, int>> labels;
};

struct DefectReport {
    bool symmetric = true;                  // arc (u,v) present iff (v,u) is
    std::optional<std::pair<int, int>> asymmetric_witness;
    std::vector<Arc> loops;                 // in arc order
    std::vector<MultiArc> multi_arcs;       // by (source, target), ascending
    bool simple_undirected() const {
        return symmetric && loops.empty() && multi_arcs.empty();
    }
};

inline DefectReport scan_defects(const TwoSidedCayleyGraph& gr) {
    DefectReport rep;
    int n = gr.order();
    for (int u = 0; u < n && rep.symmetric; ++u)
        for (int v = 0; v < n; ++v)
            if (gr.has_arc(u, v) != gr.has_arc(v, u)) {
                rep.symmetric = false;
                rep.asymmetric_witness = {u, v};
                break;
            }
    for (const Arc& a : gr.arcs())
        if (a.source == a.target) rep.loops.push_back(a);

    // arc multiplicity per ordered vertex pair
    std::vector<int> mult(std::size_t(n) * n, 0);
    for (const Arc& a : gr.arcs()) ++mult[std::size_t(a.source) * n + a.target];
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (mult[std::size_t(u) * n + v] >= 2) {
                MultiArc m{u, v, {}};
                for (const Arc& a : gr.arcs())
                    if (a.source == u && a.target == v) m.labels.push_back({a.l, a.r});
                rep.multi_arcs.push_back(std::move(m));
            }
    return rep;
}

/// Build the graph and stamp its simple/defective flag from a defect scan.
inline TwoSidedCayleyGraph build_graph(const ConnectionPair& p) {
    TwoSidedCayleyGraph g(p);
    g.set_simple_flag(scan_defects(g).simple_undirected() ? SimpleFlag::simple_undirected
                                                          : SimpleFlag::defective);
    return g;
}

/// Verdict of the per-map conditions on the connection set:
///   hat1: for every (l, r) and every vertex x there is exactly one
///         (l', r') in L x R whose map carries lambda_{l,r}(x) back to x;
///   hat1_identity: that round trip is the identity map precisely when
///         L*l, R*r and the centre Z(G) share an element;
///   hat2: every lambda_{l,r} is fixed-point-free (a derangement);
///   hat3: every non-identity composite lambda_{l1,r1} followed by
///         lambda_{l2,r2}^-1 is fixed-point-free.
/// Witnesses: hat1 -> g = x, a = l, b = r (reverse count != 1);
/// hat1_identity -> a = l, b = r (equivalence broken); hat2 -> g = fixed
/// point, a = l, b = r; hat3 -> g = common fixed point, a = index of
/// (l1, r1) in L x R, b = index of (l2, r2).
struct DerangementVerdict {
    ConditionResult hat1, hat1_identity, hat2, hat3;
    bool overall = false;
};

inline DerangementVerdict check_derangement_conditions(const ConnectionPair& p) {
    const FiniteGroup& gr = p.group();
    auto ls = p.left().elements();
    auto rs = p.right().elements();
    DerangementVerdict v;

    // hat2: no lambda_{l,r} fixes a point, i.e. no g with l^g = r.
    for (std::size_t li = 0; li < ls.size() && v.hat2.pass; ++li)
        for (std::size_t ri = 0; ri < rs.size() && v.hat2.pass; ++ri)
            for (int g = 0; g < gr.order(); ++g)
                if (gr.conj(ls[li], g) == rs[ri]) {
                    v.hat2.pass = false;
                    v.hat2.witness = ConditionWitness{g, ls[li], rs[ri]};
                    break;
                }

    // hat1: every arc (x, lambda_{l,r}(x)) has exactly one reverse label.
    for (std::size_t li = 0; li < ls.size() && v.hat1.pass; ++li)
        for (std::size_t ri = 0; ri < rs.size() && v.hat1.pass; ++ri)
            for (int x = 0; x < gr.order(); ++x) {
                int y = gr.mul(gr.mul(gr.inv(ls[li]), x), rs[ri]);
                int reverse = 0;
                for (int l2 : ls)
                    for (int r2 : rs)
                        if (gr.mul(gr.mul(gr.inv(l2), y), r2) == x) ++reverse;
                if (reverse != 1) {
                    v.hat1.pass = false;
                    v.hat1.witness = ConditionWitness{x, ls[li], rs[ri]};
                    break;
                }
            }

    // hat1_identity: some lambda_{l',r'} inverts lambda_{l,r} outright
    // (composite = identity) iff L*l, R*r and Z(G) intersect.
    ElementSet zg = center(gr);
    for (std::size_t li = 0; li < ls.size() && v.hat1_identity.pass; ++li)
        for (std::size_t ri = 0; ri < rs.size() && v.hat1_identity.pass; ++ri) {
            int l = ls[li], r = rs[ri];
            bool has_inverse_pair = false;
            for (int l2 : ls)
                for (int r2 : rs)
                    if (lambda_equal(gr, l2, r2, gr.inv(l), gr.inv(r)))
                        has_inverse_pair = true;
            ElementSet meet = p.left().translated(l, Side::right) &
                              p.right().translated(r, Side::right) & zg;
            if (has_inverse_pair != !meet.empty()) {
                v.hat1_identity.pass = false;
                v.hat1_identity.witness = ConditionWitness{-1, l, r};
            }
        }

    // hat3: composites lambda_{l1,r1} followed by lambda_{l2,r2}^-1 equal
    // lambda with parameters (l1 l2^-1, r1 r2^-1); each must be the
    // identity or fixed-point-free.
    int k = int(ls.size() * rs.size());
    auto pair_at = [&](int i) { return std::pair<int, int>{ls[std::size_t(i) / rs.size()],
                                                           rs[std::size_t(i) % rs.size()]}; };
    for (int i = 0; i < k && v.hat3.pass; ++i)
        for (int j = 0; j < k && v.hat3.pass; ++j) {
            auto [l1, r1] = pair_at(i);
            auto [l2, r2] = pair_at(j);
            int lc = gr.mul(l1, gr.inv(l2)), rc = gr.mul(r1, gr.inv(r2));
            bool ident = true, fixed = false;
            int fixed_at = -1;
            for (int g = 0; g < gr.order(); ++g) {
                int img = gr.mul(gr.mul(gr.inv(lc), g), rc);
                if (img != g) ident = false;
                else { fixed = true; if (fixed_at < 0) fixed_at = g; }
            }
            if (!ident && fixed) {
                v.hat3.pass = false;
                v.hat3.witness = ConditionWitness{fixed_at, i, j};
            }
        }

    v.overall = v.hat1.pass && v.hat1_identity.pass && v.hat2.pass && v.hat3.pass;
    return v;
}

/// Adjacency rows of the ordinary Cayley graph Cay(G, S) in the convention
/// where x -> y is an arc iff y x^-1 in S, i.e. the neighbours of x are Sx.
inline std::vector<Bitset> cayley_adjacency(const FiniteGroup& g, const ElementSet& s) {
    std::vector<Bitset> rows(std::size_t(g.order()), Bitset(g.order()));
    for (int x = 0; x < g.order(); ++x)
        for (int v : s.elements()) rows[std::size_t(x)].set(g.mul(v, x));
    return rows;
}

}  // namespace tscay
