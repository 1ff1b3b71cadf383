#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tscay/connection.hpp"

namespace tscay {

/// Undirected simple graph on at most 64 vertices, one adjacency word per
/// vertex. This is the representation the automorphism/isomorphism search
/// and the shape recognisers run on; the 64-vertex cap keeps every
/// neighbourhood test a single word op and is far above the intended
/// desk-scale graphs.
struct SimpleGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::string> labels;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_) : n(n_), adj(std::size_t(n_), 0) {
        if (n_ < 0 || n_ > 64)
            throw std::invalid_argument("SimpleGraph supports 0..64 vertices, got " +
                                        std::to_string(n_));
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("SimpleGraph does not hold loops");
        adj[std::size_t(u)] |= std::uint64_t{1} << v;
        adj[std::size_t(v)] |= std::uint64_t{1} << u;
    }
    bool edge(int u, int v) const { return (adj[std::size_t(u)] >> v) & 1u; }
    int degree(int v) const { return __builtin_popcountll(adj[std::size_t(v)]); }
    long edge_count() const {
        long twice = 0;
        for (int v = 0; v < n; ++v) twice += degree(v);
        return twice / 2;
    }
    std::vector<int> degree_sequence() const {  // ascending
        std::vector<int> d(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) d[std::size_t(v)] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n == b.n && a.adj == b.adj;
    }
};

/// Vertex sets of the connected components, each ascending, ordered by
/// smallest member.
inline std::vector<std::vector<int>> components(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.n; ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << s, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (int v = 0; v < g.n; ++v)
                if ((frontier >> v) & 1u) next |= g.adj[std::size_t(v)];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if ((comp >> v) & 1u) verts.push_back(v);
        out.push_back(std::move(verts));
    }
    return out;
}

inline bool is_connected(const SimpleGraph& g) {
    return g.n <= 1 || components(g).size() == 1;
}

/// Subgraph induced on `verts` (which must be distinct); vertex i of the
/// result is verts[i], and labels carry over.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& verts) {
    SimpleGraph out(int(verts.size()));
    out.labels.resize(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        out.labels[i] = g.labels.empty() ? std::to_string(verts[i]) : g.labels[std::size_t(verts[i])];
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.edge(verts[i], verts[j])) out.add_edge(int(i), int(j));
    return out;
}

/// View a verified-simple two-sided Cayley graph as a SimpleGraph.
/// Throws if the graph is defective (loops / multiple arcs / asymmetric)
/// or has more than 64 vertices.
inline SimpleGraph simple_view(const TwoSidedCayleyGraph& g) {
    if (g.simple_flag() != SimpleFlag::simple_undirected)
        throw std::invalid_argument("graph is not verified simple undirected");
    if (g.order() > 64)
        throw std::invalid_argument("graph too large for SimpleGraph view (order " +
                                    std::to_string(g.order()) + ")");
    SimpleGraph out(g.order());
    out.labels.resize(std::size_t(g.order()));
    for (int v = 0; v < g.order(); ++v) out.labels[std::size_t(v)] = g.group().name(v);
    for (int u = 0; u < g.order(); ++u)
        g.adjacency()[std::size_t(u)].for_each([&](int v) {
            if (u < v) out.add_edge(u, v);
        });
    return out;
}

/// The Petersen graph in its Kneser form: vertices are the 2-element
/// subsets of {1..5} in lexicographic order, edges join disjoint pairs.
inline SimpleGraph petersen_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) pairs.push_back({a, b});
    SimpleGraph g(10);
    g.labels.resize(10);
    for (int i = 0; i < 10; ++i)
        g.labels[std::size_t(i)] = "{" + std::to_string(pairs[std::size_t(i)].first) + "," +
                                   std::to_string(pairs[std::size_t(i)].second) + "}";
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = pairs[std::size_t(i)];
            auto [c, d] = pairs[std::size_t(j)];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

}  // namespace tscay
