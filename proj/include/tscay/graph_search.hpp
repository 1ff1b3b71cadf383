#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tscay/perm.hpp"
#include "tscay/simple_graph.hpp"

namespace tscay {

/// Thrown when a backtracking search exceeds its node budget. Callers that
/// can tolerate "unknown" catch this and report it as such; nothing is
/// ever silently truncated.
struct SearchBudgetExceeded : std::runtime_error {
    SearchBudgetExceeded() : std::runtime_error("graph search exceeded its node budget") {}
};

struct SearchOptions {
    long node_budget = 20'000'000;        // DFS nodes across one query
    std::size_t max_group_size = 2'000'000;  // refuse to materialise more maps
};

namespace detail {

/// Joint equitable colouring of two graphs: vertices get equal colours
/// only if degree-profile refinement cannot tell them apart. Returns
/// nullopt when the colour multisets differ (no isomorphism possible).
inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
joint_refinement(const SimpleGraph& a, const SimpleGraph& b) {
    std::vector<int> ca(std::size_t(a.n)), cb(std::size_t(b.n));
    for (int v = 0; v < a.n; ++v) ca[std::size_t(v)] = a.degree(v);
    for (int v = 0; v < b.n; ++v) cb[std::size_t(v)] = b.degree(v);

    auto signature = [](const SimpleGraph& g, const std::vector<int>& c, int v) {
        std::vector<int> sig{c[std::size_t(v)]};
        for (int w = 0; w < g.n; ++w)
            if (g.edge(v, w)) sig.push_back(c[std::size_t(w)]);
        std::sort(sig.begin() + 1, sig.end());
        return sig;
    };

    int colors = -1;
    for (int round = 0; round <= a.n + 1; ++round) {
        std::map<std::vector<int>, int> dict;
        std::vector<int> na(std::size_t(a.n)), nb(std::size_t(b.n));
        for (int v = 0; v < a.n; ++v) {
            auto sig = signature(a, ca, v);
            na[std::size_t(v)] = dict.emplace(std::move(sig), int(dict.size())).first->second;
        }
        for (int v = 0; v < b.n; ++v) {
            auto sig = signature(b, cb, v);
            nb[std::size_t(v)] = dict.emplace(std::move(sig), int(dict.size())).first->second;
        }
        ca = std::move(na);
        cb = std::move(nb);
        if (int(dict.size()) == colors) break;  // stable
        colors = int(dict.size());
    }

    std::map<int, int> count_a, count_b;
    for (int c : ca) ++count_a[c];
    for (int c : cb) ++count_b[c];
    if (count_a != count_b) return std::nullopt;
    return std::make_pair(std::move(ca), std::move(cb));
}

/// Backtracking matcher from graph a into graph b over candidate masks.
/// The callback receives each complete adjacency-preserving bijection and
/// returns true to stop the search.
class MatcherBase {
public:
    MatcherBase(const SimpleGraph& a, const SimpleGraph& b, const SearchOptions& opts)
        : a_(a), b_(b), budget_(opts.node_budget) {}

    /// Initial candidates from a joint refinement; false if incompatible.
    bool init_candidates() {
        if (a_.n != b_.n) return false;
        auto refined = joint_refinement(a_, b_);
        if (!refined) return false;
        cand_.assign(std::size_t(a_.n), 0);
        for (int u = 0; u < a_.n; ++u)
            for (int w = 0; w < b_.n; ++w)
                if (refined->first[std::size_t(u)] == refined->second[std::size_t(w)])
                    cand_[std::size_t(u)] |= std::uint64_t{1} << w;
        return true;
    }

    void restrict(int u, std::uint64_t mask) { cand_[std::size_t(u)] &= mask; }
    void forbid_fixed_points() {
        for (int u = 0; u < a_.n; ++u) cand_[std::size_t(u)] &= ~(std::uint64_t{1} << u);
    }

    template <typename CB>
    bool search(CB&& cb) {
        int n = a_.n;
        if (n == 0) {
            Perm empty;
            return cb(empty);
        }
        for (auto m : cand_)
            if (!m) return false;
        compute_order();
        levels_.assign(std::size_t(n) + 1, cand_);
        map_.assign(std::size_t(n), -1);
        return dfs(0, std::forward<CB>(cb));
    }

private:
    void compute_order() {
        int n = a_.n;
        order_.clear();
        std::vector<char> placed(std::size_t(n), 0);
        for (int step = 0; step < n; ++step) {
            int best = -1, best_cands = 1 << 30, best_links = -1;
            for (int u = 0; u < n; ++u) {
                if (placed[std::size_t(u)]) continue;
                int cands = __builtin_popcountll(cand_[std::size_t(u)]);
                int links = 0;
                for (int v : order_)
                    if (a_.edge(u, v)) ++links;
                if (cands < best_cands || (cands == best_cands && links > best_links)) {
                    best = u;
                    best_cands = cands;
                    best_links = links;
                }
            }
            order_.push_back(best);
            placed[std::size_t(best)] = 1;
        }
    }

    template <typename CB>
    bool dfs(int level, CB&& cb) {
        int n = a_.n;
        if (level == n) return cb(map_);
        int u = order_[std::size_t(level)];
        std::uint64_t options = levels_[std::size_t(level)][std::size_t(u)];
        while (options) {
            int w = __builtin_ctzll(options);
            options &= options - 1;
            if (--budget_ < 0) throw SearchBudgetExceeded();

            auto& next = levels_[std::size_t(level) + 1];
            next = levels_[std::size_t(level)];
            bool dead = false;
            for (int lv = level + 1; lv < n && !dead; ++lv) {
                int v = order_[std::size_t(lv)];
                std::uint64_t m = next[std::size_t(v)] & ~(std::uint64_t{1} << w);
                m &= a_.edge(v, u) ? b_.adj[std::size_t(w)] : ~b_.adj[std::size_t(w)];
                next[std::size_t(v)] = m;
                dead = m == 0;
            }
            if (dead) continue;
            map_[std::size_t(u)] = w;
            if (dfs(level + 1, cb)) return true;
            map_[std::size_t(u)] = -1;
        }
        return false;
    }

    const SimpleGraph& a_;
    const SimpleGraph& b_;
    long budget_;
    std::vector<std::uint64_t> cand_;
    std::vector<int> order_;
    std::vector<std::vector<std::uint64_t>> levels_;
    Perm map_;
};

}  // namespace detail

/// All automorphisms of g, as permutations of its vertices. Refuses (by
/// throwing SearchBudgetExceeded or length_error) rather than running
/// unbounded on graphs whose automorphism group explodes; prefer
/// automorphism_orbits / exists queries when only transitivity matters.
inline std::vector<Perm> automorphism_group(const SimpleGraph& g,
                                            const SearchOptions& opts = {}) {
    detail::MatcherBase m(g, g, opts);
    if (!m.init_candidates())
        throw std::logic_error("graph failed self-refinement");  // unreachable
    std::vector<Perm> out;
    m.search([&](const Perm& p) {
        out.push_back(p);
        if (out.size() > opts.max_group_size)
            throw std::length_error("automorphism group larger than max_group_size");
        return false;  // keep enumerating
    });
    return out;
}

/// Is there an automorphism sending u to v? Returns the witness if so.
inline std::optional<Perm> automorphism_mapping(const SimpleGraph& g, int u, int v,
                                                const SearchOptions& opts = {}) {
    detail::MatcherBase m(g, g, opts);
    if (!m.init_candidates()) return std::nullopt;
    m.restrict(u, std::uint64_t{1} << v);
    std::optional<Perm> found;
    m.search([&](const Perm& p) {
        found = p;
        return true;
    });
    return found;
}

/// Orbits of Aut(g) on vertices, each ascending, ordered by smallest
/// member. Computed by pairwise existence queries joined through a
/// union-find (each witness automorphism merges all its pairs at once),
/// so the full automorphism group is never materialised.
inline std::vector<std::vector<int>> automorphism_orbits(const SimpleGraph& g,
                                                         const SearchOptions& opts = {}) {
    int n = g.n;
    std::vector<int> parent(static_cast<std::size_t>(n), 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[std::size_t(x)] != x) {
            parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
            x = parent[std::size_t(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[std::size_t(find(x))] = find(y); };

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (find(u) == find(v)) continue;
            if (auto p = automorphism_mapping(g, u, v, opts))
                for (int w = 0; w < n; ++w)
                    if ((*p)[std::size_t(w)] != w) unite(w, (*p)[std::size_t(w)]);
        }

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, verts] : groups) out.push_back(std::move(verts));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

inline bool is_vertex_transitive(const SimpleGraph& g, const SearchOptions& opts = {}) {
    return automorphism_orbits(g, opts).size() <= 1;
}

/// First isomorphism from a onto b, if any.
inline std::optional<Perm> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b,
                                            const SearchOptions& opts = {}) {
    if (a.n != b.n || a.degree_sequence() != b.degree_sequence()) return std::nullopt;
    detail::MatcherBase m(a, b, opts);
    if (!m.init_candidates()) return std::nullopt;
    std::optional<Perm> found;
    m.search([&](const Perm& p) {
        found = p;
        return true;
    });
    return found;
}

inline bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b,
                              const SearchOptions& opts = {}) {
    return find_isomorphism(a, b, opts).has_value();
}

/// Closure of a set of permutations under composition. Returns nullopt as
/// soon as the closure would exceed `limit`.
inline std::optional<std::vector<Perm>> perm_closure(std::vector<Perm> gens,
                                                     std::size_t limit = 1'000'000) {
    if (gens.empty()) return std::vector<Perm>{};
    int n = int(gens[0].size());
    std::set<Perm> seen;
    seen.insert(identity_perm(n));
    std::vector<Perm> frontier{identity_perm(n)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& q : gens) {
                Perm r = compose(p, q);
                if (seen.insert(r).second) {
                    if (seen.size() > limit) return std::nullopt;
                    next.push_back(std::move(r));
                }
            }
        frontier = std::move(next);
    }
    return std::vector<Perm>(seen.begin(), seen.end());
}

/// A subgroup of Aut(g) acting regularly on the vertices (sharply
/// transitively); its existence is exactly the classical criterion for g
/// being a Cayley graph of some group.
struct RegularSubgroup {
    std::vector<Perm> elements;    // sorted, includes the identity
    std::vector<Perm> generators;  // the chain of maps that grew the subgroup
};

namespace detail {

struct SabidussiSearch {
    const SimpleGraph& g;
    SearchOptions opts;
    std::set<std::vector<Perm>> visited;
    std::optional<RegularSubgroup> result;

    // Grow semiregular subgroups: every non-identity element must be
    // fixed-point-free, so orders cap at n and a regular subgroup is
    // reached exactly when |H| = n.
    void grow(const std::vector<Perm>& elements, const std::vector<Perm>& gens) {
        if (result) return;
        int n = g.n;
        if (int(elements.size()) == n) {
            result = RegularSubgroup{elements, gens};
            return;
        }
        std::uint64_t orbit0 = 0;
        for (const Perm& p : elements) orbit0 |= std::uint64_t{1} << p[0];
        int target = __builtin_ctzll(~orbit0);  // smallest vertex off the orbit of 0

        MatcherBase m(g, g, opts);
        if (!m.init_candidates()) return;
        m.forbid_fixed_points();
        m.restrict(0, std::uint64_t{1} << target);
        m.search([&](const Perm& phi) {
            std::vector<Perm> bigger = elements;
            bigger.push_back(phi);
            auto closure = perm_closure(bigger, std::size_t(n));
            if (closure) {
                bool semiregular = true;
                for (const Perm& p : *closure)
                    if (!is_identity(p) && has_fixed_point(p)) {
                        semiregular = false;
                        break;
                    }
                if (semiregular && visited.insert(*closure).second) {
                    std::vector<Perm> next_gens = gens;
                    next_gens.push_back(phi);
                    grow(*closure, next_gens);
                }
            }
            return result.has_value();
        });
    }
};

}  // namespace detail

/// Look for a regular subgroup of Aut(g). nullopt means none exists (the
/// graph is not a Cayley graph of any group); SearchBudgetExceeded means
/// the search ran out of budget and the answer is unknown.
inline std::optional<RegularSubgroup> sabidussi_regular_subgroup(const SimpleGraph& g,
                                                                 const SearchOptions& opts = {}) {
    if (g.n == 0) return std::nullopt;
    if (g.n == 1) return RegularSubgroup{{identity_perm(1)}, {}};
    if (!is_vertex_transitive(g, opts)) return std::nullopt;
    detail::SabidussiSearch s{g, opts, {}, std::nullopt};
    s.grow({identity_perm(g.n)}, {});
    return s.result;
}

}  // namespace tscay
