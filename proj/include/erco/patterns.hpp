#pragma once

// Color patterns on K_k and forbidden families of s-edge colorings.
//
// A Pattern partitions the C(k,2) edges of K_k into classes; the family it
// generates assigns one distinct color per class. A ForbiddenFamily is
// predicate-first: membership is decided by `contains`, and explicit lists
// are materialized only on demand and under a budget.

#include "erco/combinatorics.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace erco {

class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

struct Pattern {
    int k = 0;
    int num_classes = 0;
    std::vector<int> class_of;  // length C(k,2), entries in [0, num_classes)
};

inline Pattern make_pattern(int k, std::vector<int> class_of_1based) {
    if (k < 3) throw std::invalid_argument("pattern needs k >= 3");
    if ((int)class_of_1based.size() != pair_count(k))
        throw std::invalid_argument("pattern needs one class per edge of K_k");
    Pattern p;
    p.k = k;
    p.class_of.resize(class_of_1based.size());
    int max_class = 0;
    for (size_t e = 0; e < class_of_1based.size(); ++e) {
        int c = class_of_1based[e];
        if (c < 1) throw std::invalid_argument("pattern class indices are 1-based");
        p.class_of[e] = c - 1;
        max_class = std::max(max_class, c);
    }
    std::vector<char> used(max_class, 0);
    for (int c : p.class_of) used[c] = 1;
    for (char u : used)
        if (!u) throw std::invalid_argument("pattern has an empty class");
    p.num_classes = max_class;
    return p;
}

inline Pattern monochromatic_pattern(int k) {
    return make_pattern(k, std::vector<int>(pair_count(k), 1));
}

inline Pattern rainbow_pattern(int k) {
    std::vector<int> cls(pair_count(k));
    std::iota(cls.begin(), cls.end(), 1);
    return make_pattern(k, cls);
}

// The dichromatic triangle: classes {e12,e13},{e23}.
inline Pattern dichromatic_pattern() { return make_pattern(3, {1, 1, 2}); }

struct CliqueColoring {
    int k = 0;
    int s = 0;
    std::vector<int> color_of;  // length C(k,2), entries in [0, s)
};

inline CliqueColoring make_coloring(int k, int s, std::vector<int> colors_1based) {
    if ((int)colors_1based.size() != pair_count(k))
        throw std::invalid_argument("coloring needs one color per edge of K_k");
    CliqueColoring c;
    c.k = k;
    c.s = s;
    c.color_of.resize(colors_1based.size());
    for (size_t e = 0; e < colors_1based.size(); ++e) {
        int col = colors_1based[e];
        if (col < 1 || col > s) throw std::invalid_argument("edge color out of range [1,s]");
        c.color_of[e] = col - 1;
    }
    return c;
}

enum class FamilyKind { pattern, monochromatic, rainbow, improper, union_of };

struct ForbiddenFamily {
    int k = 0;
    int s = 0;
    FamilyKind kind = FamilyKind::monochromatic;
    Pattern pattern;                                        // kind == pattern
    std::vector<std::shared_ptr<ForbiddenFamily>> parts;    // kind == union_of
    mutable std::optional<std::vector<CliqueColoring>> explicit_list;

    bool contains(const CliqueColoring& sigma) const;
    bool hits_clique(const std::vector<int>& edge_colors) const;
};

inline ForbiddenFamily monochromatic_family(int k, int s) {
    ForbiddenFamily f;
    f.k = k;
    f.s = s;
    f.kind = FamilyKind::monochromatic;
    return f;
}

inline ForbiddenFamily rainbow_family(int k, int s) {
    ForbiddenFamily f;
    f.k = k;
    f.s = s;
    f.kind = FamilyKind::rainbow;
    return f;
}

inline ForbiddenFamily improper_family(int k, int s) {
    ForbiddenFamily f;
    f.k = k;
    f.s = s;
    f.kind = FamilyKind::improper;
    return f;
}

inline ForbiddenFamily pattern_family(Pattern p, int s) {
    ForbiddenFamily f;
    f.k = p.k;
    f.s = s;
    f.kind = FamilyKind::pattern;
    f.pattern = std::move(p);
    return f;
}

inline ForbiddenFamily dichromatic_family(int s) { return pattern_family(dichromatic_pattern(), s); }

inline ForbiddenFamily union_family(std::vector<ForbiddenFamily> fams) {
    if (fams.empty()) throw std::invalid_argument("union of zero families");
    ForbiddenFamily f;
    f.k = fams.front().k;
    f.s = fams.front().s;
    f.kind = FamilyKind::union_of;
    for (auto& g : fams) {
        if (g.k != f.k || g.s != f.s)
            throw std::invalid_argument("union members disagree on k or s");
        f.parts.push_back(std::make_shared<ForbiddenFamily>(std::move(g)));
    }
    return f;
}

inline bool is_dichromatic_triangle_family(const ForbiddenFamily& x) {
    return x.kind == FamilyKind::pattern && x.k == 3 && x.pattern.num_classes == 2;
}

namespace detail {

// Literal pattern membership: constant on classes, injective across classes.
inline bool matches_pattern(const Pattern& p, const std::vector<int>& colors) {
    std::vector<int> class_color(p.num_classes, -1);
    for (size_t e = 0; e < colors.size(); ++e) {
        int cls = p.class_of[e];
        if (class_color[cls] == -1)
            class_color[cls] = colors[e];
        else if (class_color[cls] != colors[e])
            return false;
    }
    for (int a = 0; a < p.num_classes; ++a)
        for (int b = a + 1; b < p.num_classes; ++b)
            if (class_color[a] == class_color[b]) return false;
    return true;
}

inline bool has_adjacent_repeat(int k, const std::vector<int>& colors) {
    for (int h = 0; h < k; ++h)
        for (int i = 0; i < k; ++i) {
            if (i == h) continue;
            for (int j = i + 1; j < k; ++j) {
                if (j == h) continue;
                if (colors[pair_index(h, i, k)] == colors[pair_index(h, j, k)]) return true;
            }
        }
    return false;
}

inline bool all_equal(const std::vector<int>& colors) {
    for (int c : colors)
        if (c != colors.front()) return false;
    return true;
}

inline bool all_distinct(const std::vector<int>& colors) {
    for (size_t a = 0; a < colors.size(); ++a)
        for (size_t b = a + 1; b < colors.size(); ++b)
            if (colors[a] == colors[b]) return false;
    return true;
}

}  // namespace detail

inline bool ForbiddenFamily::contains(const CliqueColoring& sigma) const {
    if (sigma.k != k || sigma.s != s)
        throw std::invalid_argument("coloring dimensions do not match the family");
    switch (kind) {
        case FamilyKind::monochromatic:
            return detail::all_equal(sigma.color_of);
        case FamilyKind::rainbow:
            return detail::all_distinct(sigma.color_of);
        case FamilyKind::improper:
            return detail::has_adjacent_repeat(k, sigma.color_of);
        case FamilyKind::pattern:
            if (pattern.num_classes > s) return false;  // empty family
            return detail::matches_pattern(pattern, sigma.color_of);
        case FamilyKind::union_of:
            for (const auto& p : parts)
                if (p->contains(sigma)) return true;
            return false;
    }
    return false;
}

// Membership of the colored K_k up to relabeling its vertices. This is what a
// clique inside a host graph must be tested against: the freeness definition
// quantifies over all injective embeddings.
inline bool ForbiddenFamily::hits_clique(const std::vector<int>& edge_colors) const {
    switch (kind) {
        case FamilyKind::monochromatic:
            return detail::all_equal(edge_colors);
        case FamilyKind::rainbow:
            return detail::all_distinct(edge_colors);
        case FamilyKind::improper:
            return detail::has_adjacent_repeat(k, edge_colors);
        case FamilyKind::union_of:
            for (const auto& p : parts)
                if (p->hits_clique(edge_colors)) return true;
            return false;
        case FamilyKind::pattern: {
            if (pattern.num_classes > s) return false;
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            std::vector<int> permuted(edge_colors.size());
            do {
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        permuted[pair_index(i, j, k)] =
                            edge_colors[pair_index(perm[i], perm[j], k)];
                if (detail::matches_pattern(pattern, permuted)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
    }
    return false;
}

// All colorings generated by P with s colors: one distinct color per class,
// s(s-1)...(s-l+1) of them. Empty when l > s.
inline std::vector<CliqueColoring> pattern_family_members(const Pattern& p, int s) {
    if (s < 1) throw std::invalid_argument("pattern_family_members needs s >= 1");
    std::vector<CliqueColoring> out;
    int l = p.num_classes;
    if (l > s) return out;
    std::vector<int> choice(l, -1);
    std::vector<char> used(s, 0);
    auto rec = [&](auto&& self, int cls) -> void {
        if (cls == l) {
            CliqueColoring c;
            c.k = p.k;
            c.s = s;
            c.color_of.resize(p.class_of.size());
            for (size_t e = 0; e < p.class_of.size(); ++e) c.color_of[e] = choice[p.class_of[e]];
            out.push_back(std::move(c));
            return;
        }
        for (int col = 0; col < s; ++col) {
            if (used[col]) continue;
            used[col] = 1;
            choice[cls] = col;
            self(self, cls + 1);
            used[col] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

// Enumerate all s^C(k,2) colorings of K_k, calling fn on each.
template <typename Fn>
void for_each_coloring(int k, int s, Fn&& fn) {
    int m = pair_count(k);
    std::vector<int> colors(m, 0);
    while (true) {
        fn(std::as_const(colors));
        int e = m - 1;
        while (e >= 0 && colors[e] == s - 1) colors[e--] = 0;
        if (e < 0) break;
        ++colors[e];
    }
}

// Materialize the family as an explicit list (cached). Only permitted when
// the ambient coloring space fits the budget; Improper for large k,s is
// astronomically large, which is why families are predicate-first.
inline const std::vector<CliqueColoring>& materialize(const ForbiddenFamily& x,
                                                      double budget = 1e7) {
    if (x.explicit_list) return *x.explicit_list;
    if (x.kind == FamilyKind::pattern) {
        x.explicit_list = pattern_family_members(x.pattern, x.s);
        return *x.explicit_list;
    }
    double space = std::pow((double)x.s, (double)pair_count(x.k));
    if (space > budget)
        throw budget_error("family materialization exceeds budget", space);
    std::vector<CliqueColoring> list;
    for_each_coloring(x.k, x.s, [&](const std::vector<int>& colors) {
        CliqueColoring c;
        c.k = x.k;
        c.s = x.s;
        c.color_of = colors;
        if (x.contains(c)) list.push_back(std::move(c));
    });
    x.explicit_list = std::move(list);
    return *x.explicit_list;
}

// Textual family descriptors used by the CLI:
//   mono:k=3   dichromatic   rainbow:k=3   improper:k=4
//   pattern:k=4,classes=1,1,2,2,3,3
inline ForbiddenFamily parse_family(const std::string& descriptor, int s) {
    auto fail = [&] {
        throw std::invalid_argument("unrecognized family descriptor: " + descriptor);
    };
    auto get_k = [&](const std::string& body) {
        if (body.rfind("k=", 0) != 0) fail();
        return std::stoi(body.substr(2));
    };
    if (descriptor == "dichromatic") return dichromatic_family(s);
    auto colon = descriptor.find(':');
    if (colon == std::string::npos) fail();
    std::string head = descriptor.substr(0, colon);
    std::string body = descriptor.substr(colon + 1);
    if (head == "mono") return monochromatic_family(get_k(body), s);
    if (head == "rainbow") return rainbow_family(get_k(body), s);
    if (head == "improper") return improper_family(get_k(body), s);
    if (head == "pattern") {
        auto comma = body.find(',');
        if (comma == std::string::npos) fail();
        int k = get_k(body.substr(0, comma));
        std::string rest = body.substr(comma + 1);
        if (rest.rfind("classes=", 0) != 0) fail();
        rest = rest.substr(8);
        std::vector<int> classes;
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) classes.push_back(std::stoi(tok));
        return pattern_family(make_pattern(k, classes), s);
    }
    fail();
    return monochromatic_family(3, s);  // unreachable
}

}  // namespace erco
