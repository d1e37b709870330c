#include "degtab/costmodel.hpp"
#include "degtab/gasp.hpp"

#include <doctest.h>

using namespace degtab;

TEST_CASE("degenerate partitioning costs the same")
{
    const auto c = concrete_costs(3, 4, 5, 1, 1, 1, 7, 7);
    CHECK(c.total_outer() == c.total_inner());
}

TEST_CASE("concrete formulas")
{
    const auto N = optimal_r(2, 2, 3).N;
    const auto c = concrete_costs(8, 8, 8, 2, 2, 4, N, 9);
    CHECK(c.upload_outer == Rational(N * (64 / 2 + 64 / 2)));
    CHECK(c.download_outer == Rational(N * 64 / 4));
    CHECK(c.upload_inner == Rational(9 * 128 / 4));
    CHECK(c.download_inner == Rational(9 * 64));
    CHECK_THROWS(concrete_costs(0, 1, 1, 1, 1, 1, 1, 1));
}

TEST_CASE("asymptotic comparison")
{
    const Rational one(1);
    const Rational eps(1, 2);
    const auto r = asymptotic_compare({one, one, one, eps / 2, eps / 2, eps});
    CHECK(r.outer == Rational(2) + eps / 2);
    CHECK(r.inner == Rational(2) + eps);
    CHECK(r.outer_wins);

    // b much larger than a + L
    const auto big = asymptotic_compare({one, Rational(10), one, eps, eps, one});
    CHECK_FALSE(big.outer_wins);
    CHECK(big.inner < big.outer);

    // b = a + L = c + K
    const auto eq = asymptotic_compare({one, Rational(3, 2), one, eps, eps, one});
    CHECK(eq.outer_wins);
    CHECK(eq.outer == eq.inner);
}

TEST_CASE("exponent invariants")
{
    CostExponents bad{Rational(1), Rational(1), Rational(1), Rational(1, 2), Rational(1, 2), Rational(1, 3)};
    CHECK_THROWS_AS(asymptotic_compare(bad), std::invalid_argument);
    CostExponents neg{Rational(1), Rational(1), Rational(1), Rational(-1), Rational(1), Rational(0)};
    CHECK_THROWS_AS(asymptotic_compare(neg), std::invalid_argument);
}
