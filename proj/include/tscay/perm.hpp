#pragma once

#include <cstddef>
#include <vector>

namespace tscay {

/// Permutation of {0, ..., n-1} in one-line notation: p[i] is the image of i.
/// Composition is left-to-right: (i)(p * q) = q[p[i]].
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

/// Apply p first, then q.
inline Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
    return r;
}

inline Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
    return r;
}

inline bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= int(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

inline bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != int(i)) return false;
    return true;
}

inline bool has_fixed_point(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == int(i)) return true;
    return false;
}

}  // namespace tscay
