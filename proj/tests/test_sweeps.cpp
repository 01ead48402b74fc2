#include "erco/sweeps.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace erco;

namespace {

std::string render(const IntervalTable& t) {
    std::ostringstream out;
    for (const auto& row : t.rows) {
        out << row.s_lo << ',' << row.s_hi << ',';
        for (size_t i = 0; i < row.winners.size(); ++i)
            out << (i ? "|" : "") << row.winners[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace

TEST_CASE("even-parity interval table matches the exact winner sets") {
    IntervalTable t = sweep_R2(600);
    REQUIRE(render(t) ==
            "2,26,2\n"
            "27,27,2|4\n"
            "28,496,4\n"
            "497,600,6\n");
}

TEST_CASE("all-parity interval table detects the s=16 tie") {
    // 16^3 = 8^4 = 2^12, so g_16(2) = g_16(3) and both r attain the maximum
    IntervalTable t = sweep_R(1200);
    REQUIRE(render(t) ==
            "2,15,2\n"
            "16,16,2|3\n"
            "17,76,3\n"
            "77,299,4\n"
            "300,1058,5\n"
            "1059,1200,6\n");
}

TEST_CASE("csv rows round-trip through the schema") {
    IntervalTable t = sweep_R2(700);
    std::stringstream ss(render(t));
    std::string line;
    std::vector<IntervalRow> parsed;
    while (std::getline(ss, line)) {
        IntervalRow row;
        std::stringstream ls(line);
        std::string field;
        std::getline(ls, field, ',');
        row.s_lo = std::stoll(field);
        std::getline(ls, field, ',');
        row.s_hi = std::stoll(field);
        std::getline(ls, field);
        std::stringstream ws(field);
        std::string w;
        while (std::getline(ws, w, '|')) row.winners.push_back(std::stoi(w));
        parsed.push_back(row);
    }
    REQUIRE(parsed.size() == t.rows.size());
    for (size_t i = 0; i < parsed.size(); ++i) {
        REQUIRE(parsed[i].s_lo == t.rows[i].s_lo);
        REQUIRE(parsed[i].s_hi == t.rows[i].s_hi);
        REQUIRE(parsed[i].winners == t.rows[i].winners);
    }
}

TEST_CASE("sweeps are independent of the worker count") {
    IntervalTable a = sweep_R2(40000, 1);
    IntervalTable b = sweep_R2(40000, 8);
    REQUIRE(render(a) == render(b));
    IntervalTable c = sweep_R(40000, 3);
    IntervalTable d = sweep_R(40000, 7);
    REQUIRE(render(c) == render(d));
}

TEST_CASE("interval tables agree with R_set pointwise") {
    IntervalTable t = sweep_R2(3000);
    uint64_t state = 42;
    for (int it = 0; it < 1000; ++it) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        long long s = 2 + (long long)(state % 2999);
        const IntervalRow* row = nullptr;
        for (const auto& r : t.rows)
            if (r.s_lo <= s && s <= r.s_hi) row = &r;
        REQUIRE(row != nullptr);
        REQUIRE(row->winners == R_set(s, Parity::even).winners);
    }
}

TEST_CASE("rows are contiguous and the minimum winner is monotone") {
    IntervalTable t = sweep_R2(1000000);
    REQUIRE(t.rows.front().s_lo == 2);
    REQUIRE(t.rows.back().s_hi == 1000000);
    for (size_t i = 1; i < t.rows.size(); ++i) {
        REQUIRE(t.rows[i].s_lo == t.rows[i - 1].s_hi + 1);
        REQUIRE(t.rows[i].winners.front() >= t.rows[i - 1].winners.front());
        // adjacent winner sets overlap in at most one part count
        int common = 0;
        for (int w : t.rows[i].winners)
            for (int v : t.rows[i - 1].winners) common += (w == v);
        REQUIRE(common <= 1);
    }
}

TEST_CASE("boundary comparisons are strict on each side of a transition") {
    IntervalTable t = sweep_R2(70000);
    for (size_t i = 1; i < t.rows.size(); ++i) {
        long long s_star = t.rows[i].s_lo;
        if (t.rows[i].winners.size() == 1 && t.rows[i - 1].winners.size() == 1) {
            int r_new = t.rows[i].winners[0], r_old = t.rows[i - 1].winners[0];
            REQUIRE(compare_g_exact(s_star, r_new, r_old) == Cmp::greater);
            REQUIRE(compare_g_exact(s_star - 1, r_old, r_new) == Cmp::greater);
        }
    }
}

TEST_CASE("improper phase transitions") {
    REQUIRE(compute_sk(3, 1000).value == 26);
    REQUIRE(compute_sk(4, 10000).value == 3124);
    SkResult k5 = compute_sk(5, 1000000);
    REQUIRE(k5.found);
    REQUIRE(k5.value == 531440);
    SkResult capped = compute_sk(5, 1000);
    REQUIRE_FALSE(capped.found);
}

TEST_CASE("phase transition boundary consistency") {
    // at s(k) one of the two conditions fails; at s(k)+1 both hold, exactly
    for (int k : {3, 4}) {
        long long sk = compute_sk(k, 10000).value;
        auto cond = [&](long long s) {
            auto winners = R_set(s, Parity::even).winners;
            bool a = winners.back() >= k;
            bool b = compare_g_vs_turan_rate(s, winners.back(), k) != Cmp::less ||
                     compare_g_vs_turan_rate(s, winners.front(), k) != Cmp::less;
            return a && b;
        };
        REQUIRE_FALSE(cond(sk));
        REQUIRE(cond(sk + 1));
    }
}

TEST_CASE("rate monotonicity search") {
    VerifyReport rep = verify_t19(6, 400);
    REQUIRE(rep.pass());
    REQUIRE(rep.checked > 0);
    REQUIRE(rep.vacuous > 0);
}

TEST_CASE("per-s summaries") {
    SSummary s27 = qsolution_for_s(27);
    REQUIRE(s27.winners == std::vector<int>{2, 4});
    REQUIRE(s27.partition_count[0].has_value());
    REQUIRE(*s27.partition_count[0] == 1);
    REQUIRE(s27.partition_count[1].has_value());
    REQUIRE(*s27.partition_count[1] == multinomial(27, {9, 9, 9}));
    REQUIRE_THAT(s27.rate_per_edge[1],
                 Catch::Matchers::WithinAbs(std::log(9.0), 1e-12));

    SSummary s4 = qsolution_for_s(4);
    REQUIRE(s4.winners == std::vector<int>{2});
    REQUIRE_THAT(s4.rate_per_edge[0], Catch::Matchers::WithinAbs(std::log(4.0), 1e-12));

    SSummary s497 = qsolution_for_s(497);
    REQUIRE(s497.winners == std::vector<int>{6});
}

TEST_CASE("partition counts for six parts") {
    // s = 5 on K_6: balanced partitions are exactly the 1-factorizations
    // with one color per round; K_6 has 6 of them, each with 5! labelings
    auto small = count_balanced_partitions(6, 5);
    REQUIRE(small.has_value());
    REQUIRE(*small == 720);
    // at s = 497 the profile fiber is five-dimensional (the matching-edge
    // incidence of K_6 has rank 10), far beyond exhaustion
    SSummary sum = qsolution_for_s(497);
    REQUIRE_FALSE(sum.partition_count[0].has_value());
}
