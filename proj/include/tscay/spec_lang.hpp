#pragma once

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tscay/element_set.hpp"
#include "tscay/group.hpp"

namespace tscay {

/// Raised for malformed group specs, element literals or set literals.
/// `position` is a 0-based offset into the offending input string.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace((unsigned char)s[b])) ++b;
    while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
    return s.substr(b, e - b);
}

/// Split on a separator at paren depth 0 (so "(a,b),(c,d)" has two items).
inline std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline long parse_long(const std::string& s, std::size_t& i, const std::string& context) {
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
        throw ParseError(context + ": expected a number", i);
    long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        v = v * 10 + (s[i] - '0');
        if (v > 1'000'000) throw ParseError(context + ": number too large", i);
        ++i;
    }
    return neg ? -v : v;
}

}  // namespace detail

/// Parse a group spec: "C<n>", "D<n>" (dihedral of order 2n), "S<n>", "Q8",
/// or a direct product joined with "x", e.g. "S3xS3" or "D6xC2".
inline FiniteGroup parse_group_spec(const std::string& spec) {
    std::string s = detail::strip(spec);
    if (s.empty()) throw ParseError("empty group spec", 0);
    auto terms = detail::split_top_level(s, 'x');
    std::vector<FiniteGroup> built;
    std::size_t offset = 0;
    for (const auto& raw : terms) {
        std::string t = detail::strip(raw);
        if (t.empty()) throw ParseError("empty factor in group spec", offset);
        char head = t[0];
        if (t == "Q8") {
            built.push_back(make_quaternion());
        } else if (head == 'C' || head == 'D' || head == 'S') {
            std::size_t i = 1;
            long n = detail::parse_long(t, i, "group spec");
            if (i != t.size())
                throw ParseError("trailing characters in group spec '" + t + "'", offset + i);
            if (n < 1 || n > 200) throw ParseError("group parameter out of range", offset + 1);
            try {
                if (head == 'C') built.push_back(make_cyclic(int(n)));
                else if (head == 'D') built.push_back(make_dihedral(int(n)));
                else built.push_back(make_symmetric(int(n), 720));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), offset);
            }
        } else {
            throw ParseError("unknown group spec '" + t + "'", offset);
        }
        offset += raw.size() + 1;
    }
    FiniteGroup g = std::move(built[0]);
    for (std::size_t i = 1; i < built.size(); ++i) {
        if (long(g.order()) * built[i].order() > 200)
            throw ParseError("product group order exceeds 200", 0);
        g = direct_product(g, built[i]);
    }
    if (g.order() > 200) throw ParseError("group order exceeds 200", 0);
    return g;
}

namespace detail {

/// Evaluate a generator word like "a^2*b" or "a^-1" in a group whose
/// structure records generators a (and optionally b).
inline int eval_word(const FiniteGroup& g, const std::string& s) {
    const GroupStructure& st = g.structure();
    int acc = g.identity();
    std::size_t i = 0;
    bool expect_factor = true;
    while (i < s.size()) {
        if (std::isspace((unsigned char)s[i])) { ++i; continue; }
        if (!expect_factor) {
            if (s[i] != '*') throw ParseError("expected '*' between factors", i);
            ++i;
            expect_factor = true;
            continue;
        }
        int base;
        if (s[i] == 'e') base = g.identity();
        else if (s[i] == 'a' && st.gen_a >= 0) base = st.gen_a;
        else if (s[i] == 'b' && st.gen_b >= 0) base = st.gen_b;
        else throw ParseError(std::string("unknown generator '") + s[i] + "'", i);
        ++i;
        long exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            exp = parse_long(s, i, "exponent");
        }
        acc = g.mul(acc, g.power(base, exp));
        expect_factor = false;
    }
    if (expect_factor) throw ParseError("dangling '*' at end of word", s.size());
    return acc;
}

/// Evaluate cycle notation like "(123)", "(1 2 3)" or "(1 2)(4 5)" in S_n.
/// Points are 1-based single digits (S_n is capped well below n = 10);
/// spaces and commas between points are optional.
inline int eval_cycles(const FiniteGroup& g, const std::string& s) {
    int n = g.structure().param;
    std::vector<int> p(n);
    for (int x = 0; x < n; ++x) p[x] = x;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace((unsigned char)s[i])) { ++i; continue; }
        if (s[i] != '(') throw ParseError("expected '(' in cycle notation", i);
        ++i;
        std::vector<int> cyc;
        while (true) {
            while (i < s.size() && (std::isspace((unsigned char)s[i]) || s[i] == ',')) ++i;
            if (i >= s.size()) throw ParseError("unterminated cycle", s.size());
            if (s[i] == ')') { ++i; break; }
            if (!std::isdigit((unsigned char)s[i]))
                throw ParseError("expected a point in cycle notation", i);
            int pt = s[i] - '0';
            ++i;
            if (pt < 1 || pt > n)
                throw ParseError("cycle point " + std::to_string(pt) + " outside 1.." +
                                 std::to_string(n), i);
            cyc.push_back(pt - 1);
        }
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (p[from] != from)
                throw ParseError("point " + std::to_string(from + 1) +
                                 " appears in two cycles", i);
            p[from] = to;
        }
    }
    auto idx = g.element_by_name(cycle_name(p));
    if (!idx) throw ParseError("permutation not found in group", 0);
    return *idx;
}

}  // namespace detail

/// Parse one element literal. Accepts, depending on the group:
///  - any exact element name (always),
///  - generator words "a^2*b", "a^-1", "e" for cyclic/dihedral/quaternion,
///  - cycle notation "(1 2 3)" for symmetric groups,
///  - "(x,y)" component pairs for direct products,
///  - a bare element index for generic table groups.
inline int parse_element(const FiniteGroup& g, const std::string& literal) {
    std::string s = detail::strip(literal);
    if (s.empty()) throw ParseError("empty element literal", 0);
    if (auto idx = g.element_by_name(s)) return *idx;

    switch (g.structure().kind) {
        case GroupKind::cyclic:
        case GroupKind::dihedral:
        case GroupKind::quaternion:
            return detail::eval_word(g, s);
        case GroupKind::symmetric:
            if (s == "e") return g.identity();
            return detail::eval_cycles(g, s);
        case GroupKind::product: {
            if (s.front() != '(' || s.back() != ')')
                throw ParseError("product element must look like (x,y)", 0);
            auto parts = detail::split_top_level(s.substr(1, s.size() - 2), ',');
            if (parts.size() != 2)
                throw ParseError("product element must have two components", 0);
            const GroupStructure& st = g.structure();
            int a = parse_element(*st.factor1, parts[0]);
            int b = parse_element(*st.factor2, parts[1]);
            return a * st.factor2->order() + b;
        }
        case GroupKind::generic: {
            std::size_t i = 0;
            long v = detail::parse_long(s, i, "element index");
            if (i != s.size()) throw ParseError("trailing characters in element literal", i);
            if (v < 0 || v >= g.order()) throw ParseError("element index out of range", 0);
            return int(v);
        }
    }
    throw ParseError("unparseable element literal '" + s + "'", 0);
}

/// Parse a comma-separated set literal like "a,a^2" or "(123),(132)".
/// Commas inside parentheses do not split (product pairs, cycles).
inline ElementSet parse_element_set(const FiniteGroup& g, const std::string& literal) {
    if (detail::strip(literal).empty()) throw ParseError("empty set literal", 0);
    ElementSet out(g);
    for (const auto& item : detail::split_top_level(literal, ',')) {
        if (detail::strip(item).empty())
            throw ParseError("empty item in set literal", 0);
        out.insert(parse_element(g, item));
    }
    return out;
}

}  // namespace tscay
