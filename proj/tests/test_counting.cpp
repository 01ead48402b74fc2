#include "erco/counting.hpp"
#include "erco/qsolver.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace erco;

TEST_CASE("turan edge counts") {
    REQUIRE(turan_edges(2, 4) == 4);
    REQUIRE(turan_edges(3, 10) == 33);
    REQUIRE(turan_edges(4, 8) == 24);
    REQUIRE(turan_edges(5, 3) == 3);  // parts of size <= 1: complete graph
    REQUIRE_THROWS_AS(turan_edges(0, 5), std::invalid_argument);
    for (int r = 1; r <= 6; ++r)
        for (int n = 1; n <= 12; ++n)
            REQUIRE(turan_edges(r, n) == (long long)turan_graph(r, n).edges.size());
}

TEST_CASE("graph descriptors") {
    REQUIRE(parse_graph("K:4").edges.size() == 6);
    REQUIRE(parse_graph("turan:2,5").edges.size() == 6);
    REQUIRE(parse_graph("bipartite:2,3").edges.size() == 6);
    REQUIRE_THROWS_AS(parse_graph("K4"), std::invalid_argument);
    std::istringstream edge_list("1 2\n2 3\n1 3\n");
    SmallGraph g = graph_from_edge_list(edge_list);
    REQUIRE(g.n == 3);
    REQUIRE(g.edges.size() == 3);
}

TEST_CASE("brute-force coloring counts") {
    // triangle, no dichromatic triangle: monochromatic + rainbow colorings
    for (int s = 2; s <= 6; ++s) {
        CountResult res = count_valid_colorings(complete_graph(3), dichromatic_family(s));
        REQUIRE(res.count == cpp_int(s + s * (s - 1) * (s - 2)));
    }
    // proper 3-edge-colorings of K_4: the unique 1-factorization, 3! ways
    REQUIRE(count_valid_colorings(complete_graph(4), improper_family(4, 3)).count == 6);
    // triangle-free host: every coloring is valid
    for (int n = 2; n <= 5; ++n)
        for (int s = 2; s <= 4; ++s) {
            CountResult res = count_valid_colorings(turan_graph(2, n), dichromatic_family(s));
            REQUIRE(res.count == int_pow(cpp_int(s), (unsigned long long)turan_edges(2, n)));
        }
    REQUIRE_THROWS_AS(count_valid_colorings(complete_graph(8), dichromatic_family(9)),
                      budget_error);
}

TEST_CASE("trivial sandwich for brute-forced instances") {
    // s^t_{k-1}(n) <= F(n; X) <= s^C(n,2): the lower bound is attained by
    // the triangle-free Turan graph, the upper bound caps every host
    for (int s = 2; s <= 3; ++s)
        for (int n = 3; n <= 5; ++n) {
            ForbiddenFamily fam = dichromatic_family(s);
            cpp_int lower = int_pow(cpp_int(s), (unsigned long long)turan_edges(2, n));
            cpp_int upper = int_pow(cpp_int(s), (unsigned long long)pair_count(n));
            cpp_int f_turan = count_valid_colorings(turan_graph(2, n), fam).count;
            cpp_int f_complete = count_valid_colorings(complete_graph(n), fam).count;
            REQUIRE(f_turan == lower);
            REQUIRE(std::max(f_turan, f_complete) >= lower);
            REQUIRE(f_turan <= upper);
            REQUIRE(f_complete <= upper);
        }
}

TEST_CASE("template-following counts") {
    ColorTemplate pair9 = full_template(2, 9);
    REQUIRE(count_template_colorings(pair9, {2, 3}).count == cpp_int(531441));  // 9^6

    ColorTemplate c27 = build_matching_template(decomposition_partition(4, 27));
    REQUIRE(count_template_colorings(c27, {1, 1, 1, 1}).count == cpp_int(531441));

    ColorTemplate with_zero = make_template(3, 4);
    with_zero.at(0, 1).set();  // pair (0,1) full, the rest empty
    REQUIRE(count_template_colorings(with_zero, {2, 2, 5}).count == cpp_int(256));
    REQUIRE(count_template_colorings(c27, {0, 1, 1, 1}).count == cpp_int(729));  // 9^3
}

TEST_CASE("construction counts") {
    REQUIRE(construction_count(4, 4, decomposition_partition(4, 27)).count ==
            int_pow(cpp_int(9), 6));
    REQUIRE(construction_count(4, 8, decomposition_partition(4, 27)).count ==
            int_pow(cpp_int(9), (unsigned long long)turan_edges(4, 8)));
    REQUIRE(construction_count(2, 5, decomposition_partition(2, 3)).count ==
            int_pow(cpp_int(3), 6));
    // s=7, r=4, classes (3,2,2), n=4: product of the per-edge union sizes
    MatchingPartition mp = make_matching_partition(4, 7, {{1, 2, 3}, {4, 5}, {6, 7}});
    ColorTemplate t7 = build_matching_template(mp);
    cpp_int expect = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) expect *= t7.multiplicity(i, j);
    REQUIRE(construction_count(4, 4, mp).count == expect);
}

TEST_CASE("construction lower bound never beats the oracle") {
    int instances = 0;
    for (int s = 2; s <= 4; ++s)
        for (int r : {2, 4})
            for (int n = r; n <= (r == 2 ? 6 : 5); ++n) {
                ForbiddenFamily fam = dichromatic_family(s);
                MatchingPartition mp = decomposition_partition(r, s);
                cpp_int lower = construction_count(r, n, mp).count;
                cpp_int oracle = count_valid_colorings(turan_graph(r, n), fam, 3e8).count;
                REQUIRE(lower <= oracle);
                ++instances;
            }
    REQUIRE(instances >= 20);
}

TEST_CASE("rebalancing a non-balanced blowup gains a factor of at least 2") {
    ColorTemplate t3 = build_matching_template(decomposition_partition(2, 3));
    cpp_rational d = rebalance_gain(t3, {1, 4});
    REQUIRE(d == cpp_rational(9));  // 3^(4-1-1)

    ColorTemplate c27 = build_matching_template(decomposition_partition(4, 27));
    REQUIRE(rebalance_gain(c27, {1, 3, 2, 2}) == cpp_rational(9));

    ColorTemplate c28 = build_matching_template(decomposition_partition(4, 28));
    cpp_rational d28 = rebalance_gain(c28, {2, 4, 3, 3});
    REQUIRE(d28 >= 2);

    REQUIRE_THROWS_AS(rebalance_gain(c27, {2, 2, 2, 3}), std::invalid_argument);  // gap < 2
    ColorTemplate nonuniform = full_template(3, 4);
    REQUIRE_THROWS_AS(rebalance_gain(nonuniform, {1, 4, 2}), std::invalid_argument);

    // sweep: every uniform optimal template (r in R_2(s)) with gap >= 2
    // gains at least 2
    int tested = 0;
    for (int r : {2, 4})
        for (int s = 3; s <= 30; ++s) {
            auto winners = R_set(s, Parity::even).winners;
            if (std::find(winners.begin(), winners.end(), r) == winners.end()) continue;
            ColorTemplate t = build_matching_template(decomposition_partition(r, s));
            std::vector<std::vector<int>> size_sets =
                r == 2 ? std::vector<std::vector<int>>{{1, 3}, {2, 5}, {6, 8}, {1, 8}}
                       : std::vector<std::vector<int>>{{1, 3, 2, 2}, {2, 4, 3, 3},
                                                       {1, 8, 4, 4}, {3, 6, 5, 5}};
            for (const auto& sizes : size_sets) {
                REQUIRE(rebalance_gain(t, sizes) >= 2);
                ++tested;
            }
        }
    REQUIRE(tested > 0);
}

TEST_CASE("counting constant lower bound at small n") {
    // r=2: C_n = 1 dominates s!/(s+1)! = 1/(s+1)
    for (int f : {0, 1}) {
        EqCReport rep = verify_eqC_lower_bound(3, 2, f);
        REQUIRE(rep.pass());
    }
    EqCReport rep5 = verify_eqC_lower_bound(5, 2, 1);
    REQUIRE(rep5.pass());

    // r=4, s=27, f=0, n=4: the partition count times 9^6 versus the bound
    EqCReport rep27 = verify_eqC_lower_bound(27, 4, 0);
    REQUIRE(rep27.pass());
    REQUIRE(rep27.instances.size() >= 2);  // n = 4 and n = 8
    REQUIRE(rep27.instances[0].lhs ==
            multinomial(27, {9, 9, 9}) * int_pow(cpp_int(9), 6) *
                int_pow(factorial(10), 3));

    // r = 2 covers s <= 6 (where R_2 = {2}); r = 4 kicks in from s = 27
    for (long long s = 2; s <= 6; ++s)
        for (int f = 0; f < 2; ++f) REQUIRE(verify_eqC_lower_bound(s, 2, f).pass());
    for (long long s = 27; s <= 30; ++s)
        for (int f = 0; f < 4; ++f) REQUIRE(verify_eqC_lower_bound(s, 4, f).pass());
}

TEST_CASE("oracle dominates every feasible template blowup") {
    // count_valid_colorings(T_r(n), X) >= count_template_colorings(phi, parts)
    for (int s = 2; s <= 3; ++s) {
        ForbiddenFamily fam = dichromatic_family(s);
        BruteForceResult bf = brute_force_Q(fam, 4, 2);
        for (const auto& sol : bf.optima) {
            for (int n = sol.r; n <= 5; ++n) {
                auto parts = turan_part_sizes(sol.r, n);
                cpp_int lower = count_template_colorings(sol.phi, parts).count;
                cpp_int oracle = count_valid_colorings(turan_graph(sol.r, n), fam, 3e8).count;
                REQUIRE(lower <= oracle);
            }
        }
    }
}

TEST_CASE("oracle dominates every feasible template, exhaustively at tiny sizes") {
    // the construction colors the multipartite host restricted to pairs with
    // a nonempty color set; templates with empty pairs generate colorings of
    // that sparser graph, not of T_r(n) (where the count can be smaller:
    // r=3, s=2, phi = {12:[2]} gives 4 > F(T_3(4)) = 2)
    for (int s = 2; s <= 3; ++s)
        for (int r = 2; r <= 3; ++r) {
            ForbiddenFamily fam = dichromatic_family(s);
            auto parts = turan_part_sizes(r, 4);
            cpp_int full_oracle = count_valid_colorings(turan_graph(r, 4), fam).count;
            std::vector<int> part_of;
            for (size_t p = 0; p < parts.size(); ++p)
                for (int i = 0; i < parts[p]; ++i) part_of.push_back((int)p);
            int np = pair_count(r);
            std::vector<unsigned> masks(np, 0);
            long long feasible = 0;
            while (true) {
                ColorTemplate phi = make_template(r, s);
                for (int p = 0; p < np; ++p)
                    for (int c = 0; c < s; ++c)
                        if (masks[p] >> c & 1u) phi.colors[p].set(c);
                if (is_template_free(phi, fam)) {
                    ++feasible;
                    SmallGraph host;
                    host.n = (int)part_of.size();
                    for (int u = 0; u < host.n; ++u)
                        for (int v = u + 1; v < host.n; ++v)
                            if (part_of[u] != part_of[v] &&
                                phi.multiplicity(part_of[u], part_of[v]) > 0)
                                host.edges.emplace_back(u, v);
                    cpp_int product = count_template_colorings(phi, parts).count;
                    REQUIRE(product <= count_valid_colorings(host, fam).count);
                    if (phi.min_multiplicity() >= 1) REQUIRE(product <= full_oracle);
                }
                int p = 0;
                while (p < np && masks[p] == (1u << s) - 1) masks[p++] = 0;
                if (p == np) break;
                ++masks[p];
            }
            REQUIRE(feasible > 0);
        }
}
