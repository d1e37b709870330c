#include "degtab/equivalence.hpp"
#include "degtab/gasp.hpp"

#include <doctest.h>

#include <random>

using namespace degtab;

namespace {

DegreeTable wide_gap() { return {2, 2, 2, {0, 1}, {9, 10}, {0, 2}, {4, 5}}; }
DegreeTable skewed() { return {3, 2, 1, {19, 21, 1}, {9}, {2, 6}, {10}}; }

}  // namespace

TEST_CASE("one squeeze step on a table with a wide alpha gap")
{
    const auto step = squeeze_step(wide_gap());
    REQUIRE(step);
    CHECK(step->first.alpha() == ExponentVector{0, 1, 8, 9});
    CHECK(step->first.beta() == wide_gap().beta());
    CHECK(step->second.kind == SqueezeKind::Alpha);
}

TEST_CASE("full squeeze of a table with a wide alpha gap")
{
    const auto res = squeeze(wide_gap());
    CHECK(res.table.alpha() == ExponentVector{0, 1, 7, 8});
    CHECK(count_distinct(res.table) == count_distinct(wide_gap()));
    CHECK_FALSE(squeeze_step(res.table));
}

TEST_CASE("squeezing a wide gap")
{
    DegreeTable t{1, 1, 1, {0}, {100}, {0}, {1}};
    const auto res = squeeze(t);
    CHECK(res.table.alpha() == ExponentVector{0, 2});
    CHECK(res.steps.size() == 98);
}

TEST_CASE("GASP tables are squeezed")
{
    for (int K = 1; K <= 6; ++K)
        for (int L = 1; L <= K; ++L)
            for (int T = 1; T <= 6; ++T)
                for (int r = 1; r <= std::min(K, T); ++r) {
                    const auto t = construct({K, L, T, r});
                    CHECK_FALSE(squeeze_step(t));
                    CHECK(squeeze(t).table == t);
                    CHECK(satisfies_gap_bounds(t));
                }
}

TEST_CASE("squeeze rejects invalid tables")
{
    DegreeTable bad{2, 1, 1, {0, 0}, {5}, {0}, {1}};
    CHECK_THROWS(squeeze(bad));
}

TEST_CASE("normal form")
{
    DegreeTable t{1, 1, 1, {0}, {2}, {0}, {4}};
    const auto n = normal(t);
    CHECK(n.alpha() == ExponentVector{0, 1});
    CHECK(n.beta() == ExponentVector{0, 2});
    CHECK(is_normal(n));
    const auto g = construct({3, 2, 2, 1});
    CHECK(normal(g) == g);
}

TEST_CASE("normal and canonical forms of a skewed K=3, L=2, T=1 table")
{
    const auto n = normal(skewed());
    CHECK(n.alpha_p == ExponentVector{0, 9, 10});
    CHECK(n.alpha_s == ExponentVector{4});
    CHECK(n.beta_p == ExponentVector{0, 2});
    CHECK(n.beta_s == ExponentVector{4});

    const auto c = canonical(skewed());
    CHECK(c.alpha_p == ExponentVector{0, 1, 10});
    CHECK(c.alpha_s == ExponentVector{6});
    CHECK(c.beta_p == ExponentVector{2, 4});
    CHECK(c.beta_s == ExponentVector{0});
}

TEST_CASE("negate is an involution on entry sets")
{
    for (int r = 1; r <= 4; ++r) {
        const auto t = construct({4, 4, 4, r});
        const auto nn = negate(negate(t));
        CHECK(nn.alpha() == t.alpha());
        CHECK(nn.beta() == t.beta());
        CHECK(count_distinct(negate(t)) == count_distinct(t));
    }
}

TEST_CASE("transforms")
{
    const auto t = construct({3, 2, 3, 2});
    CHECK(apply_transform(t, {}) == t);

    EquivalenceTransform up;
    up.scale = Rational(2);
    EquivalenceTransform down;
    down.scale = Rational(1, 2);
    CHECK(apply_transform(apply_transform(t, up), down) == t);

    EquivalenceTransform shift;
    shift.shift_alpha = Rational(5);
    const auto s = apply_transform(t, shift);
    CHECK(count_distinct(s) == count_distinct(t));

    EquivalenceTransform neg;
    neg.shift_alpha = Rational(-1);
    CHECK_THROWS(apply_transform(t, neg));
    EquivalenceTransform frac;
    frac.scale = Rational(1, 3);
    CHECK_THROWS(apply_transform(t, frac));
    EquivalenceTransform zero;
    zero.scale = Rational(0);
    CHECK_THROWS(apply_transform(t, zero));
}

TEST_CASE("canonical is invariant on equivalence classes")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int K = 1 + static_cast<int>(rng() % 5);
        const int L = 1 + static_cast<int>(rng() % K);
        const int T = 1 + static_cast<int>(rng() % 5);
        const int r = 1 + static_cast<int>(rng() % std::min(K, T));
        const auto t = construct({K, L, T, r});
        EquivalenceTransform tr;
        tr.scale = Rational(static_cast<std::int64_t>(1 + rng() % 5));
        tr.shift_alpha = Rational(static_cast<std::int64_t>(rng() % 9));
        tr.shift_beta = Rational(static_cast<std::int64_t>(rng() % 9));
        const auto u = apply_transform(t, tr);
        CHECK(canonical(u) == canonical(t));
        CHECK(canonical(canonical(t)) == canonical(t));
        CHECK(canonical(negate(t)) == canonical(t));
    }
}

TEST_CASE("transpose swaps the sides")
{
    const auto t = construct({3, 3, 2, 2});
    const auto u = transpose(t);
    CHECK(u.alpha() == t.beta());
    CHECK(u.beta() == t.alpha());
    CHECK(count_distinct(u) == count_distinct(t));
    CHECK_THROWS(transpose(construct({3, 2, 2, 2})));
}
