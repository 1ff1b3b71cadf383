#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tscay/group.hpp"
#include "tscay/perm.hpp"

namespace tscay {

struct NotAnAutomorphism : std::invalid_argument {
    int g = -1, h = -1;
    NotAnAutomorphism(const std::string& what, int g_, int h_)
        : std::invalid_argument(what), g(g_), h(h_) {}
};

/// Throws NotAnAutomorphism (with a witness pair when multiplicativity
/// breaks) unless sigma is a group automorphism.
inline void require_group_automorphism(const FiniteGroup& g, const Perm& sigma) {
    if (int(sigma.size()) != g.order() || !is_permutation(sigma))
        throw NotAnAutomorphism("map is not a permutation of the group elements", -1, -1);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (sigma[std::size_t(g.mul(a, b))] !=
                g.mul(sigma[std::size_t(a)], sigma[std::size_t(b)]))
                throw NotAnAutomorphism("map does not respect multiplication at (" +
                                            g.name(a) + ", " + g.name(b) + ")",
                                        a, b);
}

/// The inner automorphism g -> g^x = x^-1 g x.
inline Perm inner_automorphism(const FiniteGroup& g, int x) {
    Perm p(std::size_t(g.order()));
    for (int a = 0; a < g.order(); ++a) p[std::size_t(a)] = g.conj(a, x);
    return p;
}

/// All distinct inner automorphisms, ordered by smallest conjugating
/// element.
inline std::vector<Perm> inner_automorphisms(const FiniteGroup& g) {
    std::vector<Perm> out;
    std::set<Perm> seen;
    for (int x = 0; x < g.order(); ++x) {
        Perm p = inner_automorphism(g, x);
        if (seen.insert(p).second) out.push_back(std::move(p));
    }
    return out;
}

/// A catalogue of group automorphisms suited to desk-scale experiments:
/// complete for cyclic groups (the power maps) and for dihedral groups
/// with n >= 3 (a -> a^k, b -> a^m b); the inner automorphisms for
/// everything else. Every map is re-validated before being returned.
/// Deterministic order; the identity map comes first.
inline std::vector<Perm> tabulated_automorphisms(const FiniteGroup& g) {
    const GroupStructure& st = g.structure();
    std::vector<Perm> out;
    std::set<Perm> seen;
    auto push = [&](Perm p) {
        require_group_automorphism(g, p);
        if (seen.insert(p).second) out.push_back(std::move(p));
    };

    if (st.kind == GroupKind::cyclic) {
        int n = st.param;
        for (int k = 1; k <= n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            Perm p(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) p[std::size_t(i)] = (i * k) % n;
            push(std::move(p));
        }
        return out;
    }
    if (st.kind == GroupKind::dihedral) {
        int n = st.param;
        // index i + n*j stands for a^i b^j; sigma_{k,m} sends it to
        // a^(ik + jm) b^j, an automorphism whenever gcd(k, n) = 1
        for (int k = 1; k <= n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            for (int m = 0; m < n; ++m) {
                Perm p(static_cast<std::size_t>(2 * n), 0);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < 2; ++j)
                        p[std::size_t(i + n * j)] = (i * k + j * m) % n + n * j;
                push(std::move(p));
            }
        }
        return out;
    }
    for (Perm& p : inner_automorphisms(g)) push(std::move(p));
    return out;
}

}  // namespace tscay
