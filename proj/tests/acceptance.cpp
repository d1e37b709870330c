// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include "degtab/bounds.hpp"
#include "degtab/costmodel.hpp"
#include "degtab/degree_table.hpp"
#include "degtab/equivalence.hpp"
#include "degtab/figures.hpp"
#include "degtab/gasp.hpp"
#include "degtab/ilp.hpp"
#include "degtab/sdmm.hpp"
#include "degtab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace degtab;

namespace {

// Collects sub-check failures with a short reason each.
struct Checker {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) failures.push_back(what);
    }
};

template <class T>
std::string str(const std::vector<T>& v)
{
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ")";
    return s.str();
}

std::string str(const std::set<std::int64_t>& v) { return str(std::vector<std::int64_t>(v.begin(), v.end())); }

int failed = 0;

void criterion(int id, const std::string& title, const std::function<void(Checker&)>& body)
{
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::printf("[%s] %2d %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, title.c_str(), secs);
    for (const auto& f : c.failures) std::printf("       - %s\n", f.c_str());
    std::fflush(stdout);
}

bool is_ap_pair(std::vector<std::int64_t> a, std::vector<std::int64_t> b)
{
    // Both sorted; same common difference.
    auto diff = [](const std::vector<std::int64_t>& v) -> std::int64_t {
        const auto d = v[1] - v[0];
        for (std::size_t i = 2; i < v.size(); ++i)
            if (v[i] - v[i - 1] != d) return -1;
        return d;
    };
    const auto da = diff(a), db = diff(b);
    return da > 0 && da == db;
}

}  // namespace

int main()
{
    criterion(1, "scores and N of GASP_r for K=L=T=4", [](Checker& c) {
        const std::int64_t S[] = {14, 19, 18, 16}, N[] = {41, 36, 37, 39};
        for (int r = 1; r <= 4; ++r) {
            const GaspParams p{4, 4, 4, r};
            const auto t = construct(p);
            const auto tag = "r=" + std::to_string(r);
            c.expect(score_closed_form(p).total == S[r - 1], tag + " closed-form S");
            c.expect(score_bruteforce(t).total == S[r - 1], tag + " brute-force S");
            c.expect(n_of_r(p) == N[r - 1], tag + " N(r)");
            c.expect(n_monolithic(p) == N[r - 1], tag + " monolithic N");
            c.expect(count_distinct(t) == N[r - 1], tag + " counted N");
        }
    });

    criterion(2, "exponent vectors of GASP_r for K=L=T=4", [](Checker& c) {
        const std::vector<ExponentVector> alpha = {
            {0, 1, 2, 3, 16, 20, 24, 28}, {0, 1, 2, 3, 16, 17, 20, 21}, {0, 1, 2, 3, 16, 17, 18, 20}, {0, 1, 2, 3, 16, 17, 18, 19}};
        const ExponentVector beta{0, 4, 8, 12, 16, 17, 18, 19};
        for (int r = 1; r <= 4; ++r) {
            const auto t = construct({4, 4, 4, r});
            c.expect(t.alpha() == alpha[r - 1], "alpha r=" + std::to_string(r) + " got " + str(t.alpha()));
            c.expect(t.beta() == beta, "beta r=" + std::to_string(r));
        }
    });

    criterion(3, "optimal chain length for K=L=T=n^2, n=1..6", [](Checker& c) {
        for (std::int64_t n = 1; n <= 6; ++n) {
            const int k = static_cast<int>(n * n);
            const std::int64_t expected = n == 1 ? 3 : n * n * n * n + 2 * n * n * n + 2 * n * n - n - 2;
            const auto red = optimal_r(k, k, k, SearchMode::Reduced);
            c.expect(red.r_star == n && red.N == expected,
                     "n=" + std::to_string(n) + " reduced gives r*=" + std::to_string(red.r_star) + " N=" + std::to_string(red.N));
            if (n <= 3) {
                const auto full = optimal_r(k, k, k, SearchMode::FullScan);
                c.expect(full.r_star == n && full.N == expected, "n=" + std::to_string(n) + " full scan");
                c.expect(count_distinct(construct({k, k, k, static_cast<int>(n)})) == expected,
                         "n=" + std::to_string(n) + " counted N");
            }
        }
    });

    criterion(4, "H(r), W, Q'' and minimizers for L=6, K=T=9", [](Checker& c) {
        const std::int64_t H[] = {76, 44, 32, 34, 32, 35, 38, 41, 45};
        for (int r = 1; r <= 9; ++r) {
            const auto h = h_function(9, 6, 9, r);
            c.expect(h == Rational(H[r - 1]), "H(" + std::to_string(r) + ")=" + to_string(h));
        }
        const auto tr = candidate_set(9, 6, 9);
        c.expect(tr.W == std::set<std::int64_t>{1, 2, 4, 8}, "W=" + str(tr.W));
        c.expect(tr.Q_double_prime == std::set<std::int64_t>{1, 2, 3, 5, 9}, "Q''=" + str(tr.Q_double_prime));
        const auto opt = optimal_r(9, 6, 9, SearchMode::FullScan);
        c.expect(opt.minimizers == std::vector<int>{3, 5}, "minimizers " + str(opt.minimizers));
        c.expect(opt.r_star == 3, "r* should be 3");
        c.expect(optimal_r(9, 6, 9, SearchMode::Reduced).N == opt.N, "reduced N differs");
    });

    criterion(5, "exhaustive census at K=L=2, T=5", [](Checker& c) {
        const auto eb = entry_upper_bounds(2, 2, 5);
        c.expect(eb && eb->alpha == 10 && eb->beta == 10, "entry bound M=10");
        const auto res = exhaustive(2, 2, 5);
        c.expect(res.alpha_candidates == 4410 && res.beta_candidates == 4410, "4410 vectors per side");
        c.expect(res.valid_tables == 2716, "valid normal tables " + std::to_string(res.valid_tables));
        c.expect(res.best_N == 17, "best N " + std::to_string(res.best_N));
        c.expect(res.raw_optima.size() == 4, "optima " + std::to_string(res.raw_optima.size()));
        const std::vector<DegreeTable> printed = {
            {2, 2, 5, {6, 8}, {0, 1, 2, 3, 4}, {7, 8}, {0, 1, 2, 3, 4}},
            {2, 2, 5, {7, 8}, {0, 1, 2, 3, 4}, {6, 8}, {0, 1, 2, 3, 4}},
            {2, 2, 5, {0, 1}, {4, 5, 6, 7, 8}, {0, 2}, {4, 5, 6, 7, 8}},
            {2, 2, 5, {0, 2}, {4, 5, 6, 7, 8}, {0, 1}, {4, 5, 6, 7, 8}},
        };
        for (std::size_t i = 0; i < printed.size(); ++i) {
            const auto want = normal(printed[i]);
            const bool found = std::find(res.raw_optima.begin(), res.raw_optima.end(), want) != res.raw_optima.end();
            c.expect(found, "printed optimum " + std::to_string(i + 1) + " missing");
        }
        for (const auto& t : res.optima) c.expect(validate(t).valid() && count_distinct(t) == 17, "optimum invalid");
    });

    criterion(6, "lower bounds", [](Checker& c) {
        const auto a = lower_bounds(2, 2, 5);
        c.expect(a.ineq1 == 15 && a.ineq2 == 16 && a.ineq3 == 7 && a.best == 16, "(2,2,5)");
        c.expect(lower_bounds(4, 4, 4).best == 28, "(4,4,4)");
        for (int K = 1; K <= 8; ++K) {
            for (int L = 1; L <= K; ++L) {
                DegreeTable t{K, L, 1, {}, {static_cast<Exponent>(K) * L}, {}, {static_cast<Exponent>(K) * L}};
                for (int k = 0; k < K; ++k) t.alpha_p.push_back(k);
                for (int l = 0; l < L; ++l) t.beta_p.push_back(static_cast<Exponent>(K) * l);
                const auto lb = lower_bounds(K, L, 1);
                const std::int64_t target = K * L + K + L;
                c.expect(validate(t).valid() && count_distinct(t) == target && lb.best == target,
                         "T=1 tightness at K=" + std::to_string(K) + " L=" + std::to_string(L));
            }
        }
    });

    criterion(7, "greedy search at K=L=T=15", [](Checker& c) {
        const ExponentVector printed{225, 226, 227, 229, 240, 241, 242, 244, 255, 256, 257, 259, 270, 271, 272};
        c.expect(count_distinct(fixed_prefix_table(15, 15, 15, printed)) == 368, "printed alpha_s");
        const auto gasp = optimal_r(15, 15, 15);
        c.expect(gasp.N == 368, "GASP_r* N=" + std::to_string(gasp.N));
        const auto g = greedy(15, 15, 15);
        c.expect(g.N == 368, "greedy N=" + std::to_string(g.N) + (g.budget_exhausted ? " (budget exhausted)" : ""));
        c.expect(validate(fixed_prefix_table(15, 15, 15, g.alpha_s)).valid(), "greedy table invalid");
    });

    criterion(8, "mean of (5+|W|)/min{K,T} over 1<=L<=K<=300, 1<=T<=300", [](Checker& c) {
        const auto s = reduction_statistic(300, 300);
        c.expect(std::abs(s.mean - 0.325) <= 0.005, "mean=" + std::to_string(s.mean));
    });

    criterion(9, "fixed-prefix model sizes and tiny solves", [](Checker& c) {
        int var_bad = 0, con_bad = 0;
        std::string first_con;
        for (int K = 1; K <= 5; ++K) {
            for (int L = 1; L <= K; ++L) {
                for (int T = 1; T <= 5; ++T) {
                    const auto m = build_ilp_fixed(K, L, T);
                    const auto f = ilp_fixed_count_formulas(K, L, T);
                    if (static_cast<std::int64_t>(m.variables().size()) != f.variables) ++var_bad;
                    if (static_cast<std::int64_t>(m.constraints().size()) != f.constraints) {
                        if (con_bad++ == 0) {
                            first_con = "(" + std::to_string(K) + "," + std::to_string(L) + "," + std::to_string(T) +
                                        "): model " + std::to_string(m.constraints().size()) + " vs formula " +
                                        std::to_string(f.constraints);
                        }
                    }
                }
            }
        }
        c.expect(var_bad == 0, std::to_string(var_bad) + " variable-count mismatches");
        c.expect(con_bad == 0, std::to_string(con_bad) + " of 75 constraint-count mismatches, first " + first_con);
        for (int T = 1; T <= 2; ++T) {
            const auto s = naive_solve(build_ilp_fixed(1, 1, T));
            const auto e = exhaustive_fixed_prefix(1, 1, T);
            c.expect(s.status == SolveStatus::Optimal && s.objective == e.best_N,
                     "solve (1,1," + std::to_string(T) + ") = " + std::to_string(s.objective) + " vs " + std::to_string(e.best_N));
        }
        const auto m = build_ilp_fixed(1, 1, 1);
        c.expect(same_model(parse_lp_text(emit_lp_text(m)), m), "LP text round trip");
    });

    criterion(10, "property suites", [](Checker& c) {
        // (i) closed forms against counting, (ii) Q'' holds a minimizer
        for (int K = 1; K <= 8; ++K) {
            for (int L = 1; L <= K; ++L) {
                for (int T = 1; T <= 8; ++T) {
                    std::int64_t best = INT64_MAX;
                    for (int r = 1; r <= std::min(K, T); ++r) {
                        const GaspParams p{K, L, T, r};
                        const auto t = construct(p);
                        const auto n = count_distinct(t);
                        best = std::min(best, n);
                        if (n_of_r(p) != n || n_monolithic(p) != n || score_closed_form(p) != score_bruteforce(t)) {
                            c.expect(false, "(i) at " + std::to_string(K) + "," + std::to_string(L) + "," + std::to_string(T) + "," + std::to_string(r));
                        }
                    }
                    std::int64_t reduced = INT64_MAX;
                    for (auto r : candidate_set(K, L, T).Q_double_prime) reduced = std::min(reduced, n_of_r({K, L, T, static_cast<int>(r)}));
                    if (reduced != best) c.expect(false, "(ii) at " + std::to_string(K) + "," + std::to_string(L) + "," + std::to_string(T));
                }
            }
        }

        // (iii) N preserved by the equivalence operations
        std::mt19937_64 rng(20240601);
        std::vector<DegreeTable> pool;
        for (int K = 1; K <= 5; ++K)
            for (int L = 1; L <= K; ++L)
                for (int T = 1; T <= 5; ++T)
                    for (int r = 1; r <= std::min(K, T); ++r) pool.push_back(construct({K, L, T, r}));
        for (const auto& t : pool) {
            const auto n = count_distinct(t);
            if (count_distinct(squeeze(t).table) != n || count_distinct(normal(t)) != n || count_distinct(negate(t)) != n ||
                count_distinct(canonical(t)) != n) {
                c.expect(false, "(iii) form changed N");
            }
        }
        for (int trial = 0; trial < 1000; ++trial) {
            const auto& t = pool[rng() % pool.size()];
            EquivalenceTransform tr;
            tr.scale = Rational(static_cast<std::int64_t>(1 + rng() % 4));
            tr.shift_alpha = Rational(static_cast<std::int64_t>(rng() % 20));
            tr.shift_beta = Rational(static_cast<std::int64_t>(rng() % 20));
            auto perm = [&](std::size_t n) {
                std::vector<std::size_t> p(n);
                std::iota(p.begin(), p.end(), 0);
                std::shuffle(p.begin(), p.end(), rng);
                return p;
            };
            tr.perm_alpha_p = perm(t.alpha_p.size());
            tr.perm_alpha_s = perm(t.alpha_s.size());
            tr.perm_beta_p = perm(t.beta_p.size());
            tr.perm_beta_s = perm(t.beta_s.size());
            const auto u = apply_transform(t, tr);
            if (count_distinct(u) != count_distinct(t) || canonical(u) != canonical(t)) c.expect(false, "(iii) transform trial " + std::to_string(trial));
        }

        // (iv) row/column intersections of size at most one
        for (int K = 1; K <= 6; ++K)
            for (int L = 1; L <= K; ++L)
                for (int T = 1; T <= 6; ++T)
                    for (int r = 1; r <= std::min(K, T); ++r) {
                        const auto t = construct({K, L, T, r});
                        for (std::size_t i = 0; i < static_cast<std::size_t>(K + T); ++i)
                            for (std::size_t j = 0; j < static_cast<std::size_t>(L + T); ++j)
                                if (row_col_intersection(t, i, j) > 1) c.expect(false, "(iv) bound broken");
                    }

        // (v) |A+B| = |A|+|B|-1 exactly for arithmetic progressions with a common difference
        std::vector<std::vector<std::int64_t>> sets;
        for (unsigned mask = 0; mask < (1u << 13); ++mask) {
            const int pc = __builtin_popcount(mask);
            if (pc < 2 || pc > 4) continue;
            std::vector<std::int64_t> s;
            for (int i = 0; i <= 12; ++i)
                if (mask >> i & 1) s.push_back(i);
            sets.push_back(std::move(s));
        }
        std::uint64_t bad = 0;
        for (const auto& a : sets) {
            for (const auto& b : sets) {
                const auto n = static_cast<std::int64_t>(sumset(a, b).size());
                const auto lo = static_cast<std::int64_t>(a.size() + b.size() - 1);
                if (n < lo || (n == lo) != is_ap_pair(a, b)) ++bad;
            }
        }
        c.expect(bad == 0, "(v) " + std::to_string(bad) + " counterexamples");
    });

    criterion(11, "SDMM round trip at (4,4,4,2), a=c=8, b=4", [](Checker& c) {
        const auto table = construct({4, 4, 4, 2});
        int mismatches = 0;
        bool exhaustive_pass = false;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            const auto run = run_protocol(table, {8, 4, 8}, 2147483647ULL, seed);
            if (!run.matches) ++mismatches;
            if (run.security.exhaustive && run.security.passed() && run.security.subsets_checked == 58905) exhaustive_pass = true;
        }
        c.expect(mismatches == 0, std::to_string(mismatches) + " decode mismatches");
        c.expect(exhaustive_pass, "no exhaustive security pass");
    });

    criterion(12, "outer vs inner partitioning", [](Checker& c) {
        for (const Rational eps : {Rational(1, 2), Rational(1), Rational(2, 3)}) {
            CostExponents e{Rational(1), Rational(1), Rational(1), eps / 2, eps / 2, eps};
            const auto r = asymptotic_compare(e);
            c.expect(r.outer == 2 + eps / 2 && r.inner == 2 + eps && r.outer_wins, "square case eps=" + to_string(eps));
        }
        std::mt19937_64 rng(7);
        auto rnd = [&](std::int64_t hi) { return Rational(static_cast<std::int64_t>(1 + rng() % hi), static_cast<std::int64_t>(1 + rng() % 6)); };
        int bad = 0;
        for (int i = 0; i < 1000; ++i) {
            CostExponents e;
            e.a = rnd(12);
            e.c = rnd(12);
            e.b = rnd(24);
            // 0 < K <= a, 0 < L <= c, K + L <= b
            e.K = std::min(e.a, e.b / 2) * Rational(static_cast<std::int64_t>(1 + rng() % 10), 10);
            e.L = std::min(e.c, e.b - e.K) * Rational(static_cast<std::int64_t>(1 + rng() % 10), 10);
            e.M = e.K + e.L;
            const auto r = asymptotic_compare(e);
            if (r.outer_wins != (r.outer <= r.inner)) ++bad;
        }
        c.expect(bad == 0, std::to_string(bad) + " inconsistent tuples");
    });

    criterion(13, "GASP_n against n^4+3n^2 for n=2..30", [](Checker& c) {
        const auto series = figure1b(30);
        const auto& mid = series[1];
        auto best = mid.rows.front();
        for (const auto& row : mid.rows)
            if (row.second > best.second) best = row;
        c.expect(best.second < Rational(138, 100), "max ratio " + to_string(best.second));
        c.expect(best.first >= 2 && best.first <= 4, "max at n=" + std::to_string(best.first));
    });

    std::printf("%d criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
