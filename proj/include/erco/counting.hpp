#pragma once

// Exact coloring counts on small graphs: the brute-force oracle for the
// number of X-free colorings, Turan edge counts, template-following counts,
// construction lower bounds, and the part-rebalancing ratio. All counts are
// arbitrary-precision integers and all ratios exact rationals.

#include "erco/patterns.hpp"
#include "erco/templates.hpp"
#include "erco/analytic.hpp"

#include <fstream>
#include <numeric>

namespace erco {

struct SmallGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> part_sizes;  // set by the multipartite constructors
};

inline long long turan_edges(int r, long long n) {
    if (r <= 0) throw std::invalid_argument("turan_edges needs r >= 1");
    long long m = n / r, f = n - m * r;
    return (long long)r * (r - 1) / 2 * m * m + (r - 1) * m * f + f * (f - 1) / 2;
}

inline std::vector<int> turan_part_sizes(int r, int n) {
    std::vector<int> sizes(r);
    int m = n / r, f = n - m * r;
    for (int i = 0; i < r; ++i) sizes[i] = m + (i < f ? 1 : 0);
    return sizes;
}

inline SmallGraph complete_graph(int n) {
    SmallGraph g;
    g.n = n;
    g.edges = complete_graph_edges(n);
    return g;
}

inline SmallGraph multipartite_graph(std::vector<int> sizes) {
    SmallGraph g;
    g.part_sizes = sizes;
    g.n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<int> part_of;
    for (size_t p = 0; p < sizes.size(); ++p)
        for (int i = 0; i < sizes[p]; ++i) part_of.push_back((int)p);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (part_of[u] != part_of[v]) g.edges.emplace_back(u, v);
    return g;
}

inline SmallGraph turan_graph(int r, int n) { return multipartite_graph(turan_part_sizes(r, n)); }

inline SmallGraph complete_bipartite(int a, int b) { return multipartite_graph({a, b}); }

inline SmallGraph graph_from_edge_list(std::istream& in) {
    SmallGraph g;
    long long u, v;
    while (in >> u >> v) {
        if (u < 1 || v < 1 || u == v) throw std::invalid_argument("edge list entries are 1-based distinct vertices");
        g.edges.emplace_back((int)std::min(u, v) - 1, (int)std::max(u, v) - 1);
        g.n = std::max(g.n, (int)std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

// CLI graph descriptors: K:n, turan:r,n, bipartite:a,b, file:path.
inline SmallGraph parse_graph(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unrecognized graph descriptor: " + descriptor);
    std::string head = descriptor.substr(0, colon), body = descriptor.substr(colon + 1);
    if (head == "K") return complete_graph(std::stoi(body));
    if (head == "file") {
        std::ifstream in(body);
        if (!in) throw std::invalid_argument("cannot open edge list file: " + body);
        return graph_from_edge_list(in);
    }
    auto comma = body.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("unrecognized graph descriptor: " + descriptor);
    int a = std::stoi(body.substr(0, comma)), b = std::stoi(body.substr(comma + 1));
    if (head == "turan") return turan_graph(a, b);
    if (head == "bipartite") return complete_bipartite(a, b);
    throw std::invalid_argument("unrecognized graph descriptor: " + descriptor);
}

struct CountResult {
    cpp_int count = 0;
    std::string method;
    long long work = 0;
};

// Exact number of X-free s-edge colorings of G by DFS over edges in fixed
// order. Each k-clique of G is tested the moment its last edge receives a
// color; the per-edge lists of completed cliques are precomputed.
inline CountResult count_valid_colorings(const SmallGraph& g, const ForbiddenFamily& x,
                                         double budget = 1e8) {
    int m = (int)g.edges.size(), s = x.s, k = x.k;
    double space = std::pow((double)s, m);
    if (space > budget) throw budget_error("coloring count exceeds budget", space);

    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    std::vector<std::vector<int>> edge_idx(g.n, std::vector<int>(g.n, -1));
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        adj[u][v] = adj[v][u] = 1;
        edge_idx[u][v] = edge_idx[v][u] = e;
    }

    // cliques_by_edge[e]: cliques whose edges all have index <= e, with e present
    std::vector<std::vector<std::vector<int>>> cliques_by_edge(m);
    std::vector<int> sub(k);
    auto collect = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            std::vector<int> edge_of_pair(pair_count(k));
            int last = -1;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    int e = edge_idx[sub[i]][sub[j]];
                    edge_of_pair[pair_index(i, j, k)] = e;
                    last = std::max(last, e);
                }
            cliques_by_edge[last].push_back(std::move(edge_of_pair));
            return;
        }
        for (int v = start; v < g.n; ++v) {
            bool ok = true;
            for (int i = 0; i < depth; ++i)
                if (!adj[sub[i]][v]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            sub[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    if (k <= g.n) collect(collect, 0, 0);

    CountResult res;
    res.method = "brute force";
    std::vector<int> color(m, -1);
    std::vector<int> clique_colors(pair_count(k));
    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            ++res.count;
            return;
        }
        for (int c = 0; c < s; ++c) {
            color[e] = c;
            ++res.work;
            bool ok = true;
            for (const auto& clique : cliques_by_edge[e]) {
                for (size_t p = 0; p < clique.size(); ++p) clique_colors[p] = color[clique[p]];
                if (x.hits_clique(clique_colors)) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, e + 1);
        }
        color[e] = -1;
    };
    rec(rec, 0);
    return res;
}

// Product formula: colorings of the complete multipartite graph restricted
// to pairs with a nonempty color set; empty pairs carry no edges and
// contribute factor 1.
inline CountResult count_template_colorings(const ColorTemplate& phi,
                                            const std::vector<int>& part_sizes) {
    if ((int)part_sizes.size() != phi.r)
        throw std::invalid_argument("part size vector length must equal r");
    CountResult res;
    res.method = "product formula";
    res.count = 1;
    for (int i = 0; i < phi.r; ++i)
        for (int j = i + 1; j < phi.r; ++j) {
            int mult = phi.multiplicity(i, j);
            if (mult == 0) continue;
            res.count *= int_pow(cpp_int(mult),
                                 (unsigned long long)part_sizes[i] * part_sizes[j]);
        }
    return res;
}

// Colorings of T_r(n) generated by the matching construction.
inline CountResult construction_count(int r, int n, const MatchingPartition& mp) {
    ColorTemplate phi = build_matching_template(mp);
    return count_template_colorings(phi, turan_part_sizes(r, n));
}

// Exact ratio of perfect-coloring counts after moving one vertex from the
// largest part to the smallest. The template must be uniform and the size
// gap at least 2.
inline cpp_rational rebalance_gain(const ColorTemplate& phi, const std::vector<int>& part_sizes) {
    if ((int)part_sizes.size() != phi.r)
        throw std::invalid_argument("part size vector length must equal r");
    if (!is_uniform(phi)) throw std::invalid_argument("rebalance_gain needs a uniform template");
    int small = 0, large = 0;
    for (int i = 1; i < phi.r; ++i) {
        if (part_sizes[i] < part_sizes[small]) small = i;
        if (part_sizes[i] > part_sizes[large]) large = i;
    }
    int gap = part_sizes[large] - part_sizes[small];
    if (gap < 2) throw std::invalid_argument("rebalance_gain needs a part-size gap >= 2");
    cpp_int l(phi.multiplicity(small, large));
    cpp_rational d(int_pow(l, (unsigned long long)(gap - 1)), 1);
    for (int y = 0; y < phi.r; ++y) {
        if (y == small || y == large) continue;
        cpp_int up = int_pow(cpp_int(phi.multiplicity(small, y)), (unsigned long long)part_sizes[y]);
        cpp_int dn = int_pow(cpp_int(phi.multiplicity(large, y)), (unsigned long long)part_sizes[y]);
        d *= cpp_rational(up, dn);
    }
    return d;
}

// ---------------------------------------------------------------------------
// The constant lower bound of the counting formula, instantiated at small n.

namespace detail {

// Size profiles (x_1..x_T) of balanced partitions for r in {2,4}: every edge
// of K_r lies in exactly one perfect matching there, so balance means the
// class sizes differ by at most one.
inline void for_each_balanced_profile(int r, long long s,
                                      const std::function<void(const std::vector<long long>&)>& fn) {
    auto pms = enumerate_perfect_matchings(r);
    int t_cnt = (int)pms.size();
    if (r != 2 && r != 4)
        throw std::invalid_argument("balanced profile enumeration implemented for r in {2,4}");
    std::vector<long long> x(t_cnt, 0);
    auto rec = [&](auto&& self, int idx, long long left) -> void {
        if (idx == t_cnt - 1) {
            x[idx] = left;
            long long mn = *std::min_element(x.begin(), x.end());
            long long mx = *std::max_element(x.begin(), x.end());
            if (mx - mn <= 1) fn(x);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            x[idx] = v;
            self(self, idx + 1, left - v);
        }
    };
    rec(rec, 0, s);
}

}  // namespace detail

struct EqCInstance {
    long long n = 0;
    cpp_int lhs;  // sum over balanced partitions of the perfect-coloring count, scaled
    cpp_int rhs;
    bool ok = false;
};

struct EqCReport {
    long long s = 0;
    int r = 0;
    int f = 0;
    std::vector<EqCInstance> instances;
    bool pass() const {
        for (const auto& i : instances)
            if (!i.ok) return false;
        return !instances.empty();
    }
};

// Checks, for every n <= 8 with n == f (mod r), that the exact count
//   sum_A |X_{T_r(n)}(phi_A)|
// dominates the closed-form lower bound
//   s!/((z+1)!^(r-1)) z^C(f,2) e^{(r/(r-1)) g(s) (t_r(n) - C(f,2))},
// after clearing the factorial denominator; the exponential is an exact
// integer power because (r-1) divides t_r(n) - C(f,2).
inline EqCReport verify_eqC_lower_bound(long long s, int r, int f) {
    if (r != 2 && r != 4) throw std::invalid_argument("eqC check implemented for r in {2,4}");
    if (f < 0 || f >= r) throw std::invalid_argument("need 0 <= f < r");
    EqCReport rep;
    rep.s = s;
    rep.r = r;
    rep.f = f;
    long long z = s / (r - 1);
    auto pms = enumerate_perfect_matchings(r);
    for (long long n = std::max(r, 2); n <= 8; ++n) {
        if (n % r != (long long)f) continue;
        auto sizes = turan_part_sizes(r, (int)n);
        EqCInstance inst;
        inst.n = n;
        cpp_int lhs = 0;
        detail::for_each_balanced_profile(r, s, [&](const std::vector<long long>& x) {
            cpp_int prod = multinomial(s, x);
            for (size_t l = 0; l < pms.size(); ++l)
                for (auto [a, b] : pms[l]) {
                    if (x[l] == 0) return;  // empty class on a used pair: no colorings
                    prod *= int_pow(cpp_int(x[l]),
                                    (unsigned long long)sizes[a] * sizes[b]);
                }
            lhs += prod;
        });
        long long t = turan_edges(r, n);
        long long cf2 = (long long)f * (f - 1) / 2;
        if ((t - cf2) % (r - 1) != 0) throw std::logic_error("t_r(n) - C(f,2) not divisible by r-1");
        cpp_int rhs = factorial(s) * int_pow(cpp_int(z), (unsigned long long)cf2) *
                      exact_g_product(s, r, (unsigned long long)((t - cf2) / (r - 1)));
        inst.lhs = lhs * int_pow(factorial(z + 1), (unsigned long long)(r - 1));
        inst.rhs = rhs;
        inst.ok = inst.lhs >= inst.rhs;
        rep.instances.push_back(std::move(inst));
    }
    return rep;
}

}  // namespace erco
