#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tscay {

/// Base class for multiplication-table validation failures. Each concrete
/// error names a witness so a bad table can be debugged from the message.
struct GroupTableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotClosedError : GroupTableError {
    int g, h, value;
    NotClosedError(int g_, int h_, int value_)
        : GroupTableError("multiplication table not closed: entry (" + std::to_string(g_) +
                          ", " + std::to_string(h_) + ") = " + std::to_string(value_) +
                          " is out of range"),
          g(g_), h(h_), value(value_) {}
};

struct NoIdentityError : GroupTableError {
    NoIdentityError() : GroupTableError("multiplication table has no two-sided identity") {}
};

struct NotAssociativeError : GroupTableError {
    int g, h, k;
    NotAssociativeError(int g_, int h_, int k_)
        : GroupTableError("multiplication table not associative: (" + std::to_string(g_) +
                          "*" + std::to_string(h_) + ")*" + std::to_string(k_) +
                          " != " + std::to_string(g_) + "*(" + std::to_string(h_) + "*" +
                          std::to_string(k_) + ")"),
          g(g_), h(h_), k(k_) {}
};

struct NoInverseError : GroupTableError {
    int g;
    explicit NoInverseError(int g_)
        : GroupTableError("element " + std::to_string(g_) + " has no two-sided inverse"),
          g(g_) {}
};

class FiniteGroup;

enum class GroupKind { generic, cyclic, dihedral, symmetric, quaternion, product };

/// How a group was built. Downstream code uses this for element-literal
/// parsing (which generators exist) and for structure-aware shortcuts
/// (e.g. recognising direct products). Generic tables leave it defaulted.
struct GroupStructure {
    GroupKind kind = GroupKind::generic;
    int param = 0;    // n for C_n / D_n (order 2n) / S_n
    int gen_a = -1;   // element index of the generator "a", if any
    int gen_b = -1;   // element index of the generator "b", if any
    std::shared_ptr<const FiniteGroup> factor1;  // set for direct products
    std::shared_ptr<const FiniteGroup> factor2;
};

/// A finite group given by a dense multiplication table over elements
/// 0..n-1. The constructor checks all four group axioms and throws a
/// witness-carrying error when one fails, so every FiniteGroup in flight
/// is a genuine group. Intended scale is order <= 200.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> names = {},
                         std::string description = "")
        : order_(int(table.size())), description_(std::move(description)) {
        if (order_ == 0) throw GroupTableError("multiplication table is empty");

        mult_.resize(std::size_t(order_) * order_);
        for (int g = 0; g < order_; ++g) {
            if (int(table[g].size()) != order_)
                throw GroupTableError("multiplication table is not square");
            for (int h = 0; h < order_; ++h) {
                int v = table[g][h];
                if (v < 0 || v >= order_) throw NotClosedError(g, h, v);
                mult_[std::size_t(g) * order_ + h] = v;
            }
        }

        identity_ = -1;
        for (int e = 0; e < order_ && identity_ < 0; ++e) {
            bool ok = true;
            for (int g = 0; g < order_ && ok; ++g)
                ok = mul(e, g) == g && mul(g, e) == g;
            if (ok) identity_ = e;
        }
        if (identity_ < 0) throw NoIdentityError();

        for (int g = 0; g < order_; ++g)
            for (int h = 0; h < order_; ++h)
                for (int k = 0; k < order_; ++k)
                    if (mul(mul(g, h), k) != mul(g, mul(h, k)))
                        throw NotAssociativeError(g, h, k);

        inv_.assign(order_, -1);
        for (int g = 0; g < order_; ++g) {
            for (int h = 0; h < order_; ++h)
                if (mul(g, h) == identity_ && mul(h, g) == identity_) {
                    inv_[g] = h;
                    break;
                }
            if (inv_[g] < 0) throw NoInverseError(g);
        }

        if (names.empty()) {
            names_.resize(order_);
            for (int g = 0; g < order_; ++g) names_[g] = std::to_string(g);
        } else {
            if (int(names.size()) != order_)
                throw std::invalid_argument("element name list has wrong length");
            names_ = std::move(names);
        }
        for (int g = 0; g < order_; ++g) {
            if (!by_name_.emplace(names_[g], g).second)
                throw std::invalid_argument("duplicate element name: " + names_[g]);
        }
        if (description_.empty())
            description_ = "table<" + std::to_string(order_) + ">";
    }

    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int g, int h) const { return mult_[std::size_t(g) * order_ + h]; }
    int inv(int g) const { return inv_[g]; }

    /// Conjugate of g by x: x^-1 * g * x.
    int conj(int g, int x) const { return mul(mul(inv(x), g), x); }

    /// g^k for any integer k (negative exponents go through the inverse).
    int power(int g, long k) const {
        int base = k < 0 ? inv(g) : g;
        unsigned long e = k < 0 ? -(unsigned long)k : (unsigned long)k;
        int acc = identity_;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    bool is_abelian() const {
        for (int g = 0; g < order_; ++g)
            for (int h = g + 1; h < order_; ++h)
                if (mul(g, h) != mul(h, g)) return false;
        return true;
    }

    const std::string& name(int g) const { return names_[g]; }
    std::optional<int> element_by_name(const std::string& s) const {
        auto it = by_name_.find(s);
        if (it == by_name_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& description() const { return description_; }
    const GroupStructure& structure() const { return structure_; }
    void set_structure(GroupStructure s) { structure_ = std::move(s); }

private:
    int order_;
    int identity_;
    std::vector<int> mult_;  // row-major n*n
    std::vector<int> inv_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> by_name_;
    std::string description_;
    GroupStructure structure_;
};

namespace detail {

/// Display name for a^i * b^j in the groups generated by a rotation-like
/// "a" and an involution-like "b" (cyclic, dihedral, quaternion).
inline std::string word_name(int i, int j) {
    std::string s;
    if (i == 1) s = "a";
    else if (i > 1) s = "a^" + std::to_string(i);
    if (j == 1) s += (s.empty() ? "b" : "*b");
    return s.empty() ? "e" : s;
}

/// Canonical cycle-notation name for a permutation of {0..n-1}, printed
/// with 1-based points: "(1 2 3)", "(1 2)(3 4)", identity "e".
inline std::string cycle_name(const std::vector<int>& p) {
    std::string s;
    std::vector<char> done(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == int(i)) continue;
        s += "(";
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = 1;
            s += (first ? "" : " ") + std::to_string(j + 1);
            first = false;
            j = std::size_t(p[j]);
        }
        s += ")";
    }
    return s.empty() ? "e" : s;
}

}  // namespace detail

/// Cyclic group C_n = <a | a^n = e>, elements ordered e, a, ..., a^(n-1).
inline FiniteGroup make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("make_cyclic: n must be >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) {
        names[i] = detail::word_name(i, 0);
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    FiniteGroup g(std::move(t), std::move(names), "C" + std::to_string(n));
    GroupStructure s;
    s.kind = GroupKind::cyclic;
    s.param = n;
    s.gen_a = 1 % n;
    g.set_structure(std::move(s));
    return g;
}

/// Dihedral group D_n of order 2n, presented <a, b | a^n = b^2 = e,
/// b*a = a^-1*b>. Elements are ordered e, a, ..., a^(n-1), b, a*b, ...,
/// a^(n-1)*b, i.e. index i + n*j stands for a^i * b^j.
inline FiniteGroup make_dihedral(int n) {
    if (n < 1) throw std::invalid_argument("make_dihedral: n must be >= 1");
    int order = 2 * n;
    auto idx = [n](int i, int j) { return ((i % n + n) % n) + n * (j & 1); };
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    std::vector<std::string> names(order);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j) {
            names[idx(i, j)] = detail::word_name(i, j);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < 2; ++l) {
                    // (a^i b^j)(a^k b^l) = a^(i + k) b^l if j = 0,
                    //                      a^(i - k) b^(1+l) if j = 1.
                    int e1 = j == 0 ? i + k : i - k;
                    t[idx(i, j)][idx(k, l)] = idx(e1, j + l);
                }
        }
    FiniteGroup g(std::move(t), std::move(names), "D" + std::to_string(n));
    GroupStructure s;
    s.kind = GroupKind::dihedral;
    s.param = n;
    s.gen_a = 1 % n;  // collapses to e when n = 1
    s.gen_b = n;
    g.set_structure(std::move(s));
    return g;
}

/// Symmetric group S_n on points {1..n}, elements in lexicographic
/// one-line order, named in cycle notation. Guarded by max_order because
/// n! explodes.
inline FiniteGroup make_symmetric(int n, int max_order = 720) {
    if (n < 1) throw std::invalid_argument("make_symmetric: n must be >= 1");
    long order = 1;
    for (int i = 2; i <= n; ++i) order *= i;
    if (order > max_order)
        throw std::invalid_argument("make_symmetric: order " + std::to_string(order) +
                                    " exceeds cap " + std::to_string(max_order));

    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::unordered_map<std::string, int> rank;
    std::vector<std::string> names(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
        names[i] = detail::cycle_name(perms[i]);
        rank[names[i]] = int(i);
    }

    int m = int(perms.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            // left-to-right action: point x goes to perms[j][perms[i][x]]
            std::vector<int> c(n);
            for (int x = 0; x < n; ++x) c[x] = perms[j][perms[i][x]];
            t[i][j] = rank.at(detail::cycle_name(c));
        }
    FiniteGroup g(std::move(t), std::move(names), "S" + std::to_string(n));
    GroupStructure s;
    s.kind = GroupKind::symmetric;
    s.param = n;
    g.set_structure(std::move(s));
    return g;
}

/// Quaternion group Q8 = <a, b | a^4 = e, b^2 = a^2, b*a = a^-1*b>,
/// elements ordered e, a, a^2, a^3, b, a*b, a^2*b, a^3*b.
inline FiniteGroup make_quaternion() {
    auto idx = [](int i, int j) { return ((i % 4 + 4) % 4) + 4 * (j & 1); };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    std::vector<std::string> names(8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) {
            names[idx(i, j)] = detail::word_name(i, j);
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 2; ++l) {
                    // like the dihedral table, but b^2 = a^2 instead of e
                    int e1 = j == 0 ? i + k : i - k;
                    int b2 = (j + l) & 2 ? 2 : 0;  // carries one b^2 = a^2
                    t[idx(i, j)][idx(k, l)] = idx(e1 + b2, j + l);
                }
        }
    FiniteGroup g(std::move(t), std::move(names), "Q8");
    GroupStructure s;
    s.kind = GroupKind::quaternion;
    s.param = 4;
    s.gen_a = 1;
    s.gen_b = 4;
    g.set_structure(std::move(s));
    return g;
}

/// Direct product G1 x G2 with pairs in row-major order: (g1, g2) has
/// index g1 * |G2| + g2. Element names are "(n1,n2)".
inline FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
    int n1 = g1.order(), n2 = g2.order();
    int order = n1 * n2;
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    std::vector<std::string> names(order);
    for (int a1 = 0; a1 < n1; ++a1)
        for (int a2 = 0; a2 < n2; ++a2) {
            int a = a1 * n2 + a2;
            names[a] = "(" + g1.name(a1) + "," + g2.name(a2) + ")";
            for (int b1 = 0; b1 < n1; ++b1)
                for (int b2 = 0; b2 < n2; ++b2)
                    t[a][b1 * n2 + b2] = g1.mul(a1, b1) * n2 + g2.mul(a2, b2);
        }
    FiniteGroup g(std::move(t), std::move(names),
                  g1.description() + "x" + g2.description());
    GroupStructure s;
    s.kind = GroupKind::product;
    s.factor1 = std::make_shared<FiniteGroup>(g1);
    s.factor2 = std::make_shared<FiniteGroup>(g2);
    g.set_structure(std::move(s));
    return g;
}

}  // namespace tscay
