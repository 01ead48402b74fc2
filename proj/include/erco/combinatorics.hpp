#pragma once

// Shared combinatorial helpers: edge indexing of complete graphs, matching
// enumeration, 1-factorizations, and exact binomial arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace erco {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Edges of K_n are kept in lexicographic order over vertex pairs:
// (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1). All per-edge sequences in the
// library use this order.
inline int pair_count(int n) { return n * (n - 1) / 2; }

inline int pair_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::vector<std::pair<int, int>> complete_graph_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(pair_count(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return edges;
}

using Matching = std::vector<std::pair<int, int>>;  // edges sorted lexicographically

namespace detail {

inline void perfect_matchings_rec(int r, unsigned used, Matching& cur,
                                  std::vector<Matching>& out) {
    int v = 0;
    while (v < r && (used >> v & 1u)) ++v;
    if (v == r) {
        out.push_back(cur);
        return;
    }
    for (int w = v + 1; w < r; ++w) {
        if (used >> w & 1u) continue;
        cur.emplace_back(v, w);
        perfect_matchings_rec(r, used | 1u << v | 1u << w, cur, out);
        cur.pop_back();
    }
}

inline void all_matchings_rec(int r, int v, unsigned used, Matching& cur,
                              std::vector<Matching>& out) {
    if (v == r) {
        out.push_back(cur);
        return;
    }
    if (used >> v & 1u) {
        all_matchings_rec(r, v + 1, used, cur, out);
        return;
    }
    // leave v unmatched
    all_matchings_rec(r, v + 1, used, cur, out);
    for (int w = v + 1; w < r; ++w) {
        if (used >> w & 1u) continue;
        cur.emplace_back(v, w);
        all_matchings_rec(r, v + 1, used | 1u << v | 1u << w, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All perfect matchings of K_r, r even, in lexicographic order on the sorted
// edge lists. Their number is r!/((r/2)! 2^(r/2)).
inline std::vector<Matching> enumerate_perfect_matchings(int r) {
    if (r <= 0 || r % 2 != 0) throw std::invalid_argument("perfect matchings need even r >= 2");
    if (r > 12) throw std::invalid_argument("perfect matching enumeration capped at r = 12");
    std::vector<Matching> out;
    Matching cur;
    detail::perfect_matchings_rec(r, 0u, cur, out);
    return out;
}

// Every matching of K_r including the empty one, sorted lexicographically by
// edge list (with the convention that shorter prefixes come first).
inline std::vector<Matching> all_matchings(int r) {
    if (r <= 0 || r > 16) throw std::invalid_argument("matching enumeration needs 1 <= r <= 16");
    std::vector<Matching> out;
    Matching cur;
    detail::all_matchings_rec(r, 0, 0u, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Round-robin (circle method) 1-factorization of K_r: r-1 pairwise
// edge-disjoint perfect matchings covering E(K_r).
inline std::vector<Matching> one_factorization(int r) {
    if (r <= 0 || r % 2 != 0) throw std::invalid_argument("1-factorization needs even r >= 2");
    std::vector<Matching> rounds;
    int m = r - 1;
    for (int j = 0; j < m; ++j) {
        Matching round;
        round.emplace_back(std::min(j, r - 1), std::max(j, r - 1));
        for (int i = 1; i <= r / 2 - 1; ++i) {
            int a = (j + i) % m;
            int b = (j - i + m) % m;
            round.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(round.begin(), round.end());
        rounds.push_back(std::move(round));
    }
    return rounds;
}

inline bool is_matching(const Matching& edges) {
    unsigned seen = 0;
    for (auto [a, b] : edges) {
        if ((seen >> a & 1u) || (seen >> b & 1u)) return false;
        seen |= 1u << a | 1u << b;
    }
    return true;
}

inline cpp_int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    cpp_int res = 1;
    for (long long i = 1; i <= k; ++i) {
        res *= n - k + i;
        res /= i;
    }
    return res;
}

inline cpp_int factorial(long long n) {
    cpp_int res = 1;
    for (long long i = 2; i <= n; ++i) res *= i;
    return res;
}

// s! / (sizes[0]! sizes[1]! ...); the sizes must sum to s.
inline cpp_int multinomial(long long s, const std::vector<long long>& sizes) {
    long long total = 0;
    for (long long x : sizes) {
        if (x < 0) throw std::invalid_argument("multinomial part < 0");
        total += x;
    }
    if (total != s) throw std::invalid_argument("multinomial parts must sum to s");
    cpp_int res = factorial(s);
    for (long long x : sizes) res /= factorial(x);
    return res;
}

inline cpp_int falling_factorial(long long s, long long l) {
    if (l > s) return 0;
    cpp_int res = 1;
    for (long long i = 0; i < l; ++i) res *= s - i;
    return res;
}

inline cpp_int int_pow(cpp_int base, unsigned long long e) {
    cpp_int res = 1;
    while (e) {
        if (e & 1ull) res *= base;
        base *= base;
        e >>= 1;
    }
    return res;
}

}  // namespace erco
