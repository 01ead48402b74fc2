#include "erco/combinatorics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace erco;

TEST_CASE("pair indexing follows lexicographic edge order") {
    auto edges = complete_graph_edges(4);
    REQUIRE(edges.size() == 6);
    REQUIRE(edges[0] == std::pair{0, 1});
    REQUIRE(edges[1] == std::pair{0, 2});
    REQUIRE(edges[5] == std::pair{2, 3});
    for (int e = 0; e < 6; ++e)
        REQUIRE(pair_index(edges[e].first, edges[e].second, 4) == e);
    REQUIRE(pair_index(3, 1, 4) == pair_index(1, 3, 4));
}

TEST_CASE("perfect matching enumeration") {
    REQUIRE(enumerate_perfect_matchings(2).size() == 1);
    REQUIRE(enumerate_perfect_matchings(4).size() == 3);
    REQUIRE(enumerate_perfect_matchings(6).size() == 15);   // 6!/(3! 2^3)
    REQUIRE(enumerate_perfect_matchings(8).size() == 105);
    REQUIRE_THROWS_AS(enumerate_perfect_matchings(5), std::invalid_argument);

    auto pms = enumerate_perfect_matchings(6);
    REQUIRE(std::is_sorted(pms.begin(), pms.end()));
    for (const auto& m : pms) {
        REQUIRE(m.size() == 3);
        REQUIRE(is_matching(m));
    }
}

TEST_CASE("all matchings including empty and partial") {
    REQUIRE(all_matchings(2).size() == 2);
    REQUIRE(all_matchings(3).size() == 4);
    REQUIRE(all_matchings(4).size() == 10);
    REQUIRE(all_matchings(5).size() == 26);
    REQUIRE(all_matchings(6).size() == 76);
    for (const auto& m : all_matchings(5)) REQUIRE(is_matching(m));
}

TEST_CASE("one-factorization covers K_r exactly once") {
    for (int r : {2, 4, 8}) {
        auto rounds = one_factorization(r);
        REQUIRE((int)rounds.size() == r - 1);
        std::set<std::pair<int, int>> seen;
        for (const auto& m : rounds) {
            REQUIRE((int)m.size() == r / 2);
            REQUIRE(is_matching(m));
            for (auto e : m) {
                REQUIRE(!seen.count(e));
                seen.insert(e);
            }
        }
        REQUIRE((int)seen.size() == pair_count(r));
    }
    REQUIRE_THROWS_AS(one_factorization(7), std::invalid_argument);
}

TEST_CASE("is_matching") {
    REQUIRE(is_matching({}));
    REQUIRE(is_matching({{0, 1}, {2, 3}}));
    REQUIRE_FALSE(is_matching({{0, 1}, {0, 2}}));
}

TEST_CASE("exact binomial arithmetic") {
    REQUIRE(binomial(27, 9) == cpp_int("4686825"));
    REQUIRE(multinomial(27, {9, 9, 9}) == factorial(27) / (factorial(9) * factorial(9) * factorial(9)));
    REQUIRE(falling_factorial(4, 2) == 12);
    REQUIRE(falling_factorial(2, 3) == 0);
    REQUIRE(int_pow(cpp_int(9), 6) == 531441);
    REQUIRE_THROWS_AS(multinomial(5, {2, 2}), std::invalid_argument);
}
