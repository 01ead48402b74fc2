#pragma once

// Color templates: assignments of color sets to pairs of parts, the central
// object of the optimization problem. Includes X-freeness checks with
// semantic fast paths per family kind, the matching-based constructions,
// uniformity, maximality and clone classification.

#include "erco/combinatorics.hpp"
#include "erco/patterns.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>

namespace erco {

using ColorSet = boost::dynamic_bitset<uint64_t>;

struct ColorTemplate {
    int r = 0;
    int s = 0;
    std::vector<ColorSet> colors;  // pair-indexed, length C(r,2)

    const ColorSet& at(int i, int j) const { return colors[pair_index(i, j, r)]; }
    ColorSet& at(int i, int j) { return colors[pair_index(i, j, r)]; }
    int multiplicity(int i, int j) const { return (int)at(i, j).count(); }
    int min_multiplicity() const {
        int m = s;
        for (const auto& cs : colors) m = std::min(m, (int)cs.count());
        return m;
    }
};

inline ColorTemplate make_template(int r, int s) {
    ColorTemplate t;
    t.r = r;
    t.s = s;
    t.colors.assign(pair_count(r), ColorSet(s));
    return t;
}

inline ColorTemplate full_template(int r, int s) {
    ColorTemplate t = make_template(r, s);
    for (auto& cs : t.colors) cs.set();
    return t;
}

// Edge set of the color graph phi^{-1}(c) on [r].
inline Matching color_class(const ColorTemplate& phi, int c) {
    Matching edges;
    for (int i = 0; i < phi.r; ++i)
        for (int j = i + 1; j < phi.r; ++j)
            if (phi.at(i, j).test(c)) edges.emplace_back(i, j);
    return edges;
}

// True iff no injective map of the colored clique sigma into the parts exists
// with every edge color drawn from the corresponding pair set. Backtracking
// over partial injective maps, pruning on the first violated edge.
inline bool is_sigma_free(const ColorTemplate& phi, const CliqueColoring& sigma) {
    if (sigma.s != phi.s) throw std::invalid_argument("sigma and template disagree on s");
    int k = sigma.k, r = phi.r;
    if (k > r) return true;
    std::vector<int> image(k, -1);
    unsigned used = 0;
    auto rec = [&](auto&& self, int v) -> bool {  // returns true if embedding found
        if (v == k) return true;
        for (int p = 0; p < r; ++p) {
            if (used >> p & 1u) continue;
            bool ok = true;
            for (int u = 0; u < v; ++u) {
                int c = sigma.color_of[pair_index(u, v, k)];
                if (!phi.at(image[u], p).test(c)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = p;
            used |= 1u << p;
            if (self(self, v + 1)) return true;
            used &= ~(1u << p);
        }
        return false;
    };
    return !rec(rec, 0);
}

namespace detail {

// Bitmask graph on the parts; used by the semantic freeness checks.
struct PartGraph {
    int r;
    std::vector<unsigned> adj;
    PartGraph(int r_) : r(r_), adj(r_, 0) {}
    void add(int i, int j) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    bool has(int i, int j) const { return adj[i] >> j & 1u; }
};

// Does `g` contain a clique of size `need` inside candidate set `cand`
// (all members of which must already be adjacent to the fixed base)?
inline bool has_clique(const PartGraph& g, unsigned cand, int need) {
    if (need == 0) return true;
    if (__builtin_popcount(cand) < need) return false;
    unsigned rest = cand;
    while (rest) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        if (has_clique(g, (cand & g.adj[v]) & ~((1u << (v + 1)) - 1), need - 1)) return true;
        if (has_clique(g, rest, need)) return false;  // all supersets of remaining handled above
    }
    return false;
}

// Clique search restricted to vertices adjacent to every base vertex.
inline bool clique_through(const PartGraph& g, unsigned base_mask, int need) {
    unsigned cand = ~0u >> (32 - g.r);
    unsigned rest = base_mask;
    while (rest) {
        int v = __builtin_ctz(rest);
        rest &= rest - 1;
        cand &= g.adj[v];
    }
    cand &= ~base_mask;
    // simple DFS over candidates
    auto rec = [&](auto&& self, unsigned c, int n) -> bool {
        if (n == 0) return true;
        while (c) {
            int v = __builtin_ctz(c);
            c &= c - 1;
            if (self(self, c & g.adj[v], n - 1)) return true;
        }
        return false;
    };
    return rec(rec, cand, need);
}

inline PartGraph nonempty_pair_graph(const ColorTemplate& phi) {
    PartGraph g(phi.r);
    for (int i = 0; i < phi.r; ++i)
        for (int j = i + 1; j < phi.r; ++j)
            if (phi.at(i, j).any()) g.add(i, j);
    return g;
}

// Improper family: a forbidden embedded clique exists iff some cherry
// (h;i,j) shares a color and {h,i,j} extends to a K_k within the graph of
// nonempty pairs. This is exact for templates with empty pairs as well,
// where "every color class is a matching" would be too strict.
inline bool improper_free(const ColorTemplate& phi, int k) {
    int r = phi.r;
    if (r < k) return true;
    PartGraph g = nonempty_pair_graph(phi);
    ColorSet shared(phi.s);
    for (int h = 0; h < r; ++h)
        for (int i = 0; i < r; ++i) {
            if (i == h) continue;
            for (int j = i + 1; j < r; ++j) {
                if (j == h) continue;
                shared = phi.at(h, i);
                shared &= phi.at(h, j);
                if (!shared.any()) continue;
                if (!g.has(i, j)) continue;
                unsigned base = 1u << h | 1u << i | 1u << j;
                if (clique_through(g, base, k - 3)) return false;
            }
        }
    return true;
}

// Monochromatic family: free iff no color class contains a K_k.
inline bool monochromatic_free(const ColorTemplate& phi, int k) {
    if (phi.r < k) return true;
    for (int c = 0; c < phi.s; ++c) {
        PartGraph g(phi.r);
        bool nonempty = false;
        for (int i = 0; i < phi.r; ++i)
            for (int j = i + 1; j < phi.r; ++j)
                if (phi.at(i, j).test(c)) {
                    g.add(i, j);
                    nonempty = true;
                }
        if (!nonempty) continue;
        for (int v = 0; v < phi.r; ++v)
            if (clique_through(g, 1u << v, k - 1)) return false;
    }
    return true;
}

// Dichromatic triangle family: free iff no cherry (h;i,j) shares a color c
// with a second color available on the closing pair ij.
inline bool dichromatic_free(const ColorTemplate& phi) {
    int r = phi.r;
    ColorSet shared(phi.s), closing(phi.s);
    for (int h = 0; h < r; ++h)
        for (int i = 0; i < r; ++i) {
            if (i == h) continue;
            for (int j = i + 1; j < r; ++j) {
                if (j == h) continue;
                shared = phi.at(h, i);
                shared &= phi.at(h, j);
                if (!shared.any()) continue;
                closing = phi.at(i, j);
                if (!closing.any()) continue;
                if (closing.count() > 1) return false;
                // exactly one closing color: forbidden unless it is the only
                // shared color on the cherry
                if (shared.count() > 1) return false;
                if (shared.find_first() != closing.find_first()) return false;
            }
        }
    return true;
}

// Rainbow triangles: free iff no triple of pairs admits three distinct
// representatives (Hall's condition on three sets).
inline bool rainbow_triangle_free(const ColorTemplate& phi) {
    int r = phi.r;
    ColorSet un(phi.s);
    for (int h = 0; h < r; ++h)
        for (int i = h + 1; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                const ColorSet& A = phi.at(h, i);
                const ColorSet& B = phi.at(h, j);
                const ColorSet& C = phi.at(i, j);
                if (!A.any() || !B.any() || !C.any()) continue;
                un = A;
                un |= B;
                if (un.count() < 2) continue;
                un = A;
                un |= C;
                if (un.count() < 2) continue;
                un = B;
                un |= C;
                if (un.count() < 2) continue;
                un = A;
                un |= B;
                un |= C;
                if (un.count() >= 3) return false;
            }
    return true;
}

}  // namespace detail

// X-freeness of a template. Semantic checks cover the families used
// throughout; other pattern families fall back to enumerating their members.
inline bool is_template_free(const ColorTemplate& phi, const ForbiddenFamily& x) {
    if (x.s != phi.s) throw std::invalid_argument("family and template disagree on s");
    switch (x.kind) {
        case FamilyKind::improper:
            return detail::improper_free(phi, x.k);
        case FamilyKind::monochromatic:
            return detail::monochromatic_free(phi, x.k);
        case FamilyKind::rainbow:
            if (x.k == 3) return detail::rainbow_triangle_free(phi);
            break;
        case FamilyKind::pattern:
            if (x.k == 3 && x.pattern.num_classes == 2) return detail::dichromatic_free(phi);
            break;
        case FamilyKind::union_of:
            for (const auto& p : x.parts)
                if (!is_template_free(phi, *p)) return false;
            return true;
    }
    // generic route: check every member of the family
    const auto& members = materialize(x);
    for (const auto& sigma : members)
        if (!is_sigma_free(phi, sigma)) return false;
    return true;
}

// phi in Phi_{X,t}(r): multiplicity floor t everywhere plus X-freeness.
inline bool is_feasible(const ColorTemplate& phi, const ForbiddenFamily& x, int t) {
    if (t > 0 && phi.min_multiplicity() < t) return false;
    return is_template_free(phi, x);
}

// Maximality of a feasible template: every color addition breaks freeness.
inline bool is_maximal(const ColorTemplate& phi, const ForbiddenFamily& x) {
    ColorTemplate work = phi;
    for (int i = 0; i < phi.r; ++i)
        for (int j = i + 1; j < phi.r; ++j)
            for (int c = 0; c < phi.s; ++c) {
                if (work.at(i, j).test(c)) continue;
                work.at(i, j).set(c);
                bool free = is_template_free(work, x);
                work.at(i, j).reset(c);
                if (free) return false;
            }
    return true;
}

// Uniformity at i: the r-1 sets at i partition [s] with sizes differing by
// at most one.
inline bool is_uniform_at(const ColorTemplate& phi, int i) {
    ColorSet seen(phi.s);
    size_t total = 0, mn = phi.s + 1, mx = 0;
    for (int j = 0; j < phi.r; ++j) {
        if (j == i) continue;
        const ColorSet& cs = phi.at(i, j);
        size_t c = cs.count();
        total += c;
        mn = std::min(mn, c);
        mx = std::max(mx, c);
        seen |= cs;
    }
    if (seen.count() != (size_t)phi.s) return false;  // not covering [s]
    if (total != (size_t)phi.s) return false;         // overlap somewhere
    return phi.r == 1 || mx <= mn + 1;
}

inline bool is_uniform(const ColorTemplate& phi) {
    for (int i = 0; i < phi.r; ++i)
        if (!is_uniform_at(phi, i)) return false;
    return true;
}

enum class CloneKind { not_clone, clone, strong_clone };

// i is a clone of j when their attachments agree everywhere else and the
// pair between them carries at most one color (zero for a strong clone).
inline CloneKind clone_kind(const ColorTemplate& phi, int i, int j) {
    if (i == j) throw std::invalid_argument("clone_kind needs i != j");
    for (int l = 0; l < phi.r; ++l) {
        if (l == i || l == j) continue;
        if (phi.at(i, l) != phi.at(j, l)) return CloneKind::not_clone;
    }
    size_t m = phi.at(i, j).count();
    if (m == 0) return CloneKind::strong_clone;
    if (m == 1) return CloneKind::clone;
    return CloneKind::not_clone;
}

// ---------------------------------------------------------------------------
// Matching partitions and the constructions built from them.

struct MatchingPartition {
    int r = 0;  // even
    int s = 0;
    std::vector<ColorSet> classes;  // one color set per perfect matching, canonical order
};

inline MatchingPartition make_matching_partition(int r, int s,
                                                 const std::vector<std::vector<int>>& classes_1based) {
    MatchingPartition mp;
    mp.r = r;
    mp.s = s;
    size_t t = enumerate_perfect_matchings(r).size();
    if (classes_1based.size() != t)
        throw std::invalid_argument("matching partition needs one class per perfect matching");
    for (const auto& cls : classes_1based) {
        ColorSet cs(s);
        for (int c : cls) {
            if (c < 1 || c > s) throw std::invalid_argument("color out of range");
            cs.set(c - 1);
        }
        mp.classes.push_back(std::move(cs));
    }
    return mp;
}

// A matching partition that follows a 1-factorization with an equipartition
// of [s] over its r-1 rounds; all other perfect matchings get empty classes.
inline MatchingPartition decomposition_partition(int r, int s) {
    auto pms = enumerate_perfect_matchings(r);
    auto rounds = one_factorization(r);
    MatchingPartition mp;
    mp.r = r;
    mp.s = s;
    mp.classes.assign(pms.size(), ColorSet(s));
    int z = s / (r - 1), a = s - (r - 1) * z;
    int next = 0;
    for (int j = 0; j < r - 1; ++j) {
        auto it = std::find(pms.begin(), pms.end(), rounds[j]);
        int idx = (int)(it - pms.begin());
        int take = z + (j < a ? 1 : 0);
        for (int c = 0; c < take; ++c) mp.classes[idx].set(next++);
    }
    return mp;
}

// phi_A(e) = union of classes over perfect matchings containing e. Validates
// the partition and balance invariants, naming the failing one.
inline ColorTemplate build_matching_template(const MatchingPartition& mp) {
    if (mp.r <= 0 || mp.r % 2 != 0)
        throw std::invalid_argument("matching partition invariant violated: r must be even");
    auto pms = enumerate_perfect_matchings(mp.r);
    if (mp.classes.size() != pms.size())
        throw std::invalid_argument(
            "matching partition invariant violated: class count != number of perfect matchings");
    ColorSet seen(mp.s);
    size_t total = 0;
    for (const auto& cs : mp.classes) {
        total += cs.count();
        seen |= cs;
    }
    if (seen.count() != (size_t)mp.s || total != (size_t)mp.s)
        throw std::invalid_argument(
            "matching partition invariant violated: classes must partition [s]");
    ColorTemplate phi = make_template(mp.r, mp.s);
    for (size_t l = 0; l < pms.size(); ++l)
        for (auto [i, j] : pms[l]) phi.at(i, j) |= mp.classes[l];
    size_t mn = mp.s + 1, mx = 0;
    for (const auto& cs : phi.colors) {
        mn = std::min(mn, cs.count());
        mx = std::max(mx, cs.count());
    }
    if (mx > mn + 1)
        throw std::invalid_argument(
            "matching partition invariant violated: edge multiplicities differ by more than 1");
    return phi;
}

// ---------------------------------------------------------------------------
// Serialization: one line "i j : c1,c2,..." per pair (1-based), preceded by a
// header line "template r s". Round-trips bit-exactly.

inline std::string serialize_template(const ColorTemplate& phi) {
    std::ostringstream out;
    out << "template " << phi.r << ' ' << phi.s << '\n';
    for (int i = 0; i < phi.r; ++i)
        for (int j = i + 1; j < phi.r; ++j) {
            out << (i + 1) << ' ' << (j + 1) << " :";
            const ColorSet& cs = phi.at(i, j);
            bool first = true;
            for (size_t c = cs.find_first(); c != ColorSet::npos; c = cs.find_next(c)) {
                out << (first ? " " : ",") << (c + 1);
                first = false;
            }
            out << '\n';
        }
    return out.str();
}

inline ColorTemplate parse_template(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int r = 0, s = 0;
    in >> tag >> r >> s;
    if (tag != "template" || r < 1 || s < 1)
        throw std::invalid_argument("bad template header");
    ColorTemplate phi = make_template(r, s);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || !std::isdigit((unsigned char)line[first]))
            continue;  // blank, comment or metadata line
        std::istringstream ls(line);
        int i = 0, j = 0;
        char colon = 0;
        ls >> i >> j >> colon;
        if (colon != ':' || i < 1 || j < 1 || i > r || j > r || i == j)
            throw std::invalid_argument("bad template line: " + line);
        std::string rest;
        std::getline(ls, rest);
        std::stringstream cs(rest);
        std::string tok;
        while (std::getline(cs, tok, ',')) {
            size_t pos = tok.find_first_not_of(" \t");
            if (pos == std::string::npos) continue;
            int c = std::stoi(tok.substr(pos));
            if (c < 1 || c > s) throw std::invalid_argument("color out of range in: " + line);
            phi.at(i - 1, j - 1).set(c - 1);
        }
    }
    return phi;
}

}  // namespace erco
