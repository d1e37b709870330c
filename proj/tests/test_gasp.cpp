#include "degtab/bounds.hpp"
#include "degtab/gasp.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace degtab;

TEST_CASE("scores and sizes for K=L=T=4")
{
    const std::int64_t S[] = {14, 19, 18, 16}, N[] = {41, 36, 37, 39};
    for (int r = 1; r <= 4; ++r) {
        CAPTURE(r);
        const GaspParams p{4, 4, 4, r};
        CHECK(score_closed_form(p).total == S[r - 1]);
        CHECK(n_of_r(p) == N[r - 1]);
        CHECK(n_monolithic(p) == N[r - 1]);
    }
}

TEST_CASE("construct follows the definition")
{
    CHECK(construct({4, 4, 4, 1}).alpha() == ExponentVector{0, 1, 2, 3, 16, 20, 24, 28});
    CHECK(construct({4, 4, 4, 2}).alpha() == ExponentVector{0, 1, 2, 3, 16, 17, 20, 21});
    CHECK(construct({4, 4, 4, 4}).beta() == ExponentVector{0, 4, 8, 12, 16, 17, 18, 19});
    for (int K = 1; K <= 7; ++K)
        for (int L = 1; L <= K; ++L)
            for (int T = 1; T <= 7; ++T)
                for (int r = 1; r <= std::min(K, T); ++r) {
                    const auto t = construct({K, L, T, r});
                    CHECK(t.alpha_s == oracle::gasp_alpha_s(K, L, T, r));
                }
}

TEST_CASE("L > K is handled by transposing")
{
    const GaspParams p{2, 5, 3, 2};
    CHECK(is_transposed(p));
    const auto t = construct(p);
    CHECK(t.K == 5);
    CHECK(t.L == 2);
    CHECK(validate(t).valid());
    CHECK(count_distinct(t) == n_of_r({5, 2, 3, 2}));
}

TEST_CASE("bad parameters")
{
    CHECK_THROWS(construct({4, 4, 4, 5}));
    CHECK_THROWS(construct({4, 4, 2, 3}));
    CHECK_THROWS(construct({0, 1, 1, 1}));
}

TEST_CASE("small named values")
{
    CHECK(n_of_r({1, 1, 1, 1}) == 3);
    CHECK(n_of_r({2, 2, 5, 2}) == 17);
    CHECK(n_of_r({4, 4, 4, 2}) == 36);
}

TEST_CASE("GASP_big has 2KL + 2T - 1 entries once T >= K")
{
    for (int K = 1; K <= 8; ++K)
        for (int L = 1; L <= K; ++L)
            for (int T = 1; T <= 8; ++T) {
                const auto n = n_of_r({K, L, T, std::min(K, T)});
                if (T >= K) {
                    CHECK(n == 2 * K * L + 2 * T - 1);
                } else {
                    CHECK(n <= 2 * K * L + 2 * T - 1);
                }
            }
    CHECK(n_of_r({4, 4, 2, 2}) == 29);
}

TEST_CASE("N(r) never drops below the lower bound")
{
    for (int K = 1; K <= 8; ++K)
        for (int L = 1; L <= K; ++L)
            for (int T = 1; T <= 8; ++T) {
                const auto lb = lower_bounds(K, L, T).best;
                for (int r = 1; r <= std::min(K, T); ++r) CHECK(n_of_r({K, L, T, r}) >= lb);
            }
}

TEST_CASE("H(r) for L=6, K=T=9")
{
    const std::int64_t H[] = {76, 44, 32, 34, 32, 35, 38, 41, 45};
    for (int r = 1; r <= 9; ++r) CHECK(h_function(9, 6, 9, r) == Rational(H[r - 1]));
}

TEST_CASE("candidate sets for L=6, K=T=9")
{
    const auto tr = candidate_set(9, 6, 9);
    CHECK(tr.W == std::set<std::int64_t>{1, 2, 4, 8});
    CHECK(tr.Q_prime == std::set<std::int64_t>{1, 9});
    CHECK(tr.Q == std::set<std::int64_t>{1, 2, 3, 5});
    CHECK(tr.Q_double_prime == std::set<std::int64_t>{1, 2, 3, 5, 9});
    CHECK(w_count(9, 6, 9) == 4);
}

TEST_CASE("candidate set with K=T=1")
{
    for (int L = 1; L <= 1; ++L) {
        const auto tr = candidate_set(1, L, 1);
        for (auto r : tr.Q_double_prime) CHECK(r == 1);
    }
}

TEST_CASE("optimal_r")
{
    const auto a = optimal_r(4, 4, 4);
    CHECK(a.r_star == 2);
    CHECK(a.N == 36);
    CHECK(optimal_r(4, 4, 4).trace.Q_double_prime.count(2) == 1);

    const auto b = optimal_r(9, 9, 9, SearchMode::FullScan);
    CHECK(b.r_star == 3);
    CHECK(b.N == 148);

    const auto c = optimal_r(9, 6, 9, SearchMode::FullScan);
    CHECK(c.minimizers == std::vector<int>{3, 5});
    CHECK(c.r_star == 3);
}

TEST_CASE("Q'' alone can miss the minimizer when T > K")
{
    const auto tr = candidate_set(4, 4, 11);
    CHECK(tr.Q_double_prime == std::set<std::int64_t>{2, 3});
    CHECK(n_of_r({4, 4, 11, 3}) == 55);
    CHECK(n_of_r({4, 4, 11, 4}) == 53);
    const auto o = optimal_r(4, 4, 11);
    CHECK(o.r_star == 4);
    CHECK(o.N == 53);
}

TEST_CASE("reduced search agrees with a full scan")
{
    for (int K = 1; K <= 20; ++K)
        for (int L = 1; L <= K; ++L)
            for (int T = 1; T <= 30; ++T) {
                CAPTURE(K);
                CAPTURE(L);
                CAPTURE(T);
                std::int64_t best = INT64_MAX;
                for (int r = 1; r <= std::min(K, T); ++r) best = std::min(best, n_of_r({K, L, T, r}));
                CHECK(optimal_r(K, L, T).N == best);
                CHECK(optimal_r(K, L, T, SearchMode::FullScan).N == best);
            }
}

TEST_CASE("optimal chain for K=L=T=n^2")
{
    for (std::int64_t n = 2; n <= 6; ++n) {
        const int k = static_cast<int>(n * n);
        const auto o = optimal_r(k, k, k);
        CHECK(o.r_star == n);
        CHECK(o.N == n * n * n * n + 2 * n * n * n + 2 * n * n - n - 2);
    }
}

TEST_CASE("reduction statistic on a small range")
{
    const auto s = reduction_statistic(3, 3);
    CHECK(s.triples == 18);
    CHECK(s.mean > 0.0);
}
