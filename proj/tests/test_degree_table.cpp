#include "degtab/degree_table.hpp"
#include "degtab/gasp.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace degtab;

namespace {

DegreeTable table_r2() { return {4, 4, 4, {0, 1, 2, 3}, {16, 17, 20, 21}, {0, 4, 8, 12}, {16, 17, 18, 19}}; }

}  // namespace

TEST_CASE("validate accepts the K=L=T=4, r=2 table")
{
    CHECK(validate(table_r2()).valid());
    CHECK(count_distinct(table_r2()) == 36);
    CHECK(score_bruteforce(table_r2()).total == 19);
}

TEST_CASE("duplicate data exponent violates D1")
{
    DegreeTable t{2, 1, 1, {0, 0}, {5}, {0}, {1}};
    const auto rep = validate(t);
    REQUIRE_FALSE(rep.valid());
    CHECK(rep.violations.front().condition == Condition::D1);
    CHECK_THROWS_AS(count_distinct(t), InvalidTableError);
}

TEST_CASE("duplicate beta violates D2")
{
    DegreeTable t{1, 1, 1, {0}, {1}, {3}, {3}};
    const auto rep = validate(t);
    bool d2 = false;
    for (const auto& v : rep.violations) d2 |= v.condition == Condition::D2;
    CHECK(d2);
}

TEST_CASE("a data product hit by a mask product violates D3")
{
    // 0+2 = 2 and 2+0 = 2
    DegreeTable t{1, 1, 1, {0}, {2}, {2}, {0}};
    const auto rep = validate(t);
    REQUIRE_FALSE(rep.valid());
    bool d3 = false;
    for (const auto& v : rep.violations) d3 |= v.condition == Condition::D3 && v.witness == ExponentVector{2};
    CHECK(d3);
}

TEST_CASE("K=L=T=1 table with alpha=beta=(0,1)")
{
    DegreeTable t{1, 1, 1, {0}, {1}, {0}, {1}};
    CHECK(validate(t).valid());
    CHECK(count_distinct(t) == 3);
    // N = KL + K + T - 1 + T(L + T) - S  gives  S = 1
    CHECK(score_bruteforce(t).total == 1);
}

TEST_CASE("structural errors are not validity failures")
{
    DegreeTable short_alpha{2, 1, 1, {0}, {5}, {0}, {1}};
    CHECK_THROWS_AS(validate(short_alpha), StructuralError);
    DegreeTable negative{1, 1, 1, {-1}, {5}, {0}, {1}};
    CHECK_THROWS_AS(validate(negative), StructuralError);
    DegreeTable zero_k{0, 1, 1, {}, {5}, {0}, {1}};
    CHECK_THROWS_AS(validate(zero_k), StructuralError);
}

TEST_CASE("sumset")
{
    CHECK(sumset(ExponentVector{0, 1}, ExponentVector{0, 2}) == ExponentVector{0, 1, 2, 3});
    CHECK(sumset(ExponentVector{0}, ExponentVector{5, 7}) == ExponentVector{5, 7});
    // a + d[m] plus b + d[n] is a + b + d[m + n]
    CHECK(sumset(ExponentVector{3, 6, 9}, ExponentVector{1, 4, 7, 10}) == ExponentVector{4, 7, 10, 13, 16, 19});
    CHECK_THROWS(sumset(ExponentVector{}, ExponentVector{1}));
}

TEST_CASE("sumset size bounds on random sets")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        ExponentVector a, b;
        for (int i = 0; i < 1 + static_cast<int>(rng() % 6); ++i) a.push_back(static_cast<Exponent>(rng() % 30));
        for (int i = 0; i < 1 + static_cast<int>(rng() % 6); ++i) b.push_back(static_cast<Exponent>(rng() % 30));
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        const auto n = sumset(a, b).size();
        CHECK(n >= a.size() + b.size() - 1);
        CHECK(n <= a.size() * b.size());
    }
}

TEST_CASE("count_distinct is at least KL and matches the oracle on GASP tables")
{
    for (int K = 1; K <= 8; ++K)
        for (int L = 1; L <= K; ++L)
            for (int T = 1; T <= 8; ++T)
                for (int r = 1; r <= std::min(K, T); ++r) {
                    const auto t = construct({K, L, T, r});
                    REQUIRE(validate(t).valid());
                    const auto n = count_distinct(t);
                    CHECK(n >= K * L);
                    CHECK(n == oracle::distinct_entries(t));
                    CHECK(score_bruteforce(t).total == oracle::score(t));
                }
}

TEST_CASE("row/column intersections hold at most one entry")
{
    for (int K = 1; K <= 6; ++K)
        for (int L = 1; L <= K; ++L)
            for (int T = 1; T <= 6; ++T)
                for (int r = 1; r <= std::min(K, T); ++r) {
                    const auto t = construct({K, L, T, r});
                    for (std::size_t i = 0; i < static_cast<std::size_t>(K + T); ++i)
                        for (std::size_t j = 0; j < static_cast<std::size_t>(L + T); ++j) REQUIRE(row_col_intersection(t, i, j) <= 1);
                }
}

TEST_CASE("with D3, distinct alpha_s already implies distinct alpha")
{
    // Random tables that pass D3 and have distinct alpha_s never fail D1.
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        DegreeTable t{2, 2, 2, {}, {}, {}, {}};
        for (int i = 0; i < 2; ++i) {
            t.alpha_p.push_back(static_cast<Exponent>(rng() % 12));
            t.alpha_s.push_back(static_cast<Exponent>(rng() % 12));
            t.beta_p.push_back(static_cast<Exponent>(rng() % 12));
            t.beta_s.push_back(static_cast<Exponent>(rng() % 12));
        }
        if (t.alpha_s[0] == t.alpha_s[1]) continue;
        bool d1 = false, d3 = false;
        for (const auto& v : validate(t).violations) {
            d1 |= v.condition == Condition::D1;
            d3 |= v.condition == Condition::D3;
        }
        if (!d3) {
            ++checked;
            CHECK_FALSE(d1);
        }
    }
    CHECK(checked > 0);
}
