#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "tscay/bitset.hpp"
#include "tscay/group.hpp"

namespace tscay {

enum class Side { left, right };

/// A subset of a fixed finite group, stored as a bitset over element
/// indices. Carries a pointer to its group so cross-group operations can
/// be rejected instead of silently producing nonsense.
class ElementSet {
public:
    explicit ElementSet(const FiniteGroup& g) : group_(&g), bits_(g.order()) {}

    static ElementSet of(const FiniteGroup& g, std::initializer_list<int> elems) {
        ElementSet s(g);
        for (int e : elems) s.insert(e);
        return s;
    }
    static ElementSet of(const FiniteGroup& g, const std::vector<int>& elems) {
        ElementSet s(g);
        for (int e : elems) s.insert(e);
        return s;
    }
    static ElementSet full(const FiniteGroup& g) {
        ElementSet s(g);
        for (int e = 0; e < g.order(); ++e) s.bits_.set(e);
        return s;
    }

    const FiniteGroup& group() const { return *group_; }

    bool contains(int g) const { return bits_.test(g); }
    void insert(int g) {
        if (g < 0 || g >= group_->order())
            throw std::out_of_range("element index " + std::to_string(g) +
                                    " out of range for group of order " +
                                    std::to_string(group_->order()));
        bits_.set(g);
    }
    void erase(int g) { bits_.reset(g); }

    int size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(std::size_t(size()));
        bits_.for_each([&](int g) { out.push_back(g); });
        return out;
    }

    const Bitset& bits() const { return bits_; }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.group_ == b.group_ && a.bits_ == b.bits_;
    }

    /// S^-1 = { s^-1 : s in S }.
    ElementSet inverse() const {
        ElementSet out(*group_);
        bits_.for_each([&](int g) { out.bits_.set(group_->inv(g)); });
        return out;
    }

    /// S^x = x^-1 S x.
    ElementSet conjugated(int x) const {
        ElementSet out(*group_);
        bits_.for_each([&](int g) { out.bits_.set(group_->conj(g, x)); });
        return out;
    }

    /// Side::left gives xS, Side::right gives Sx.
    ElementSet translated(int x, Side side) const {
        ElementSet out(*group_);
        bits_.for_each([&](int g) {
            out.bits_.set(side == Side::left ? group_->mul(x, g) : group_->mul(g, x));
        });
        return out;
    }

    bool is_inverse_closed() const {
        bool ok = true;
        bits_.for_each([&](int g) { ok = ok && bits_.test(group_->inv(g)); });
        return ok;
    }

    ElementSet& operator&=(const ElementSet& o) {
        require_same_group(o);
        bits_ &= o.bits_;
        return *this;
    }
    ElementSet& operator|=(const ElementSet& o) {
        require_same_group(o);
        bits_ |= o.bits_;
        return *this;
    }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

    void require_same_group(const ElementSet& o) const {
        if (group_ != o.group_)
            throw std::invalid_argument("element sets belong to different groups");
    }

    /// Comma-separated element names in index order, e.g. "a,a^2".
    std::string to_string() const {
        std::string s;
        bits_.for_each([&](int g) {
            if (!s.empty()) s += ",";
            s += group_->name(g);
        });
        return s;
    }

private:
    const FiniteGroup* group_;
    Bitset bits_;
};

/// AB = { ab : a in A, b in B } (duplicates collapse).
inline ElementSet product(const ElementSet& a, const ElementSet& b) {
    a.require_same_group(b);
    const FiniteGroup& g = a.group();
    ElementSet out(g);
    for (int x : a.elements())
        for (int y : b.elements()) out.insert(g.mul(x, y));
    return out;
}

/// Subgroup generated by S, grown by closing under multiplication.
/// S must be nonempty (the empty set generates nothing representable here).
inline ElementSet subgroup_closure(const ElementSet& s) {
    if (s.empty()) throw std::invalid_argument("subgroup_closure: empty generating set");
    const FiniteGroup& g = s.group();
    ElementSet closure(g);
    closure.insert(g.identity());
    std::vector<int> frontier = {g.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int gen : s.elements()) {
                int y = g.mul(x, gen);
                if (!closure.contains(y)) {
                    closure.insert(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return closure;
}

inline bool is_subgroup(const ElementSet& s) {
    if (!s.contains(s.group().identity())) return false;
    for (int x : s.elements())
        for (int y : s.elements())
            if (!s.contains(s.group().mul(x, y))) return false;
    return true;
}

inline ElementSet center(const FiniteGroup& g) {
    ElementSet out(g);
    for (int z = 0; z < g.order(); ++z) {
        bool central = true;
        for (int x = 0; x < g.order() && central; ++x)
            central = g.mul(z, x) == g.mul(x, z);
        if (central) out.insert(z);
    }
    return out;
}

/// N_G(S) = { x : S^x = S } for an arbitrary nonempty subset S.
inline ElementSet normalizer(const ElementSet& s) {
    if (s.empty()) throw std::invalid_argument("normalizer: empty set");
    const FiniteGroup& g = s.group();
    ElementSet out(g);
    for (int x = 0; x < g.order(); ++x)
        if (s.conjugated(x) == s) out.insert(x);
    return out;
}

inline ElementSet conjugacy_class(const FiniteGroup& g, int elem) {
    ElementSet out(g);
    for (int x = 0; x < g.order(); ++x) out.insert(g.conj(elem, x));
    return out;
}

}  // namespace tscay
