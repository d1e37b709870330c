#include "degtab/search.hpp"

#include "degtab/equivalence.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace degtab {

namespace {

constexpr std::size_t kMaxSum = 512;
using Mask = std::bitset<kMaxSum>;

struct Side {
    ExponentVector prefix;
    ExponentVector suffix;
    ExponentVector all;
    Mask mask;
    Exponent gcd = 0;
};

// Every split of {0} ∪ S, S ⊆ {1..bound} with |S| = p + s - 1, into sorted
// blocks of sizes p and s.
std::vector<Side> enumerate_sides(int p, int s, Exponent bound)
{
    std::vector<Side> out;
    const int n = p + s;
    if (bound + 1 < n) return out;

    std::vector<Exponent> chosen{0};
    auto emit_splits = [&] {
        // Choose which s of the n values form the suffix.
        std::vector<bool> in_suffix(n, false);
        std::fill(in_suffix.end() - s, in_suffix.end(), true);
        do {
            Side side;
            for (int i = 0; i < n; ++i) {
                (in_suffix[i] ? side.suffix : side.prefix).push_back(chosen[i]);
                side.mask.set(static_cast<std::size_t>(chosen[i]));
                side.gcd = std::gcd(side.gcd, chosen[i]);
            }
            side.all = side.prefix;
            side.all.insert(side.all.end(), side.suffix.begin(), side.suffix.end());
            out.push_back(std::move(side));
        } while (std::next_permutation(in_suffix.begin(), in_suffix.end()));
    };
    auto rec = [&](auto&& self, Exponent next) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            emit_splits();
            return;
        }
        const Exponent needed = n - static_cast<Exponent>(chosen.size());
        for (Exponent v = next; v + needed - 1 <= bound; ++v) {
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

void finalize(SearchResult& res)
{
    std::sort(res.raw_optima.begin(), res.raw_optima.end(),
              [](const DegreeTable& a, const DegreeTable& b) { return a.flattened() < b.flattened(); });
    for (const auto& t : res.raw_optima) res.optima.push_back(canonical(t));
    std::sort(res.optima.begin(), res.optima.end(),
              [](const DegreeTable& a, const DegreeTable& b) { return a.flattened() < b.flattened(); });
    res.optima.erase(std::unique(res.optima.begin(), res.optima.end()), res.optima.end());
}

void check_params(int K, int L, int T)
{
    if (K < 1 || L < 1 || T < 1) throw std::invalid_argument("K, L and T must be positive");
}

}  // namespace

SearchResult exhaustive(int K, int L, int T, std::optional<EntryBounds> bounds)
{
    check_params(K, L, T);
    if (!bounds) bounds = entry_upper_bounds(K, L, T);
    if (!bounds) {
        throw std::invalid_argument("no entry bounds: need 2KL - K - L - min{K,L} + 3 <= T, or explicit bounds");
    }
    if (bounds->alpha < 0 || bounds->beta < 0) throw std::invalid_argument("entry bounds must be non-negative");
    if (static_cast<std::size_t>(bounds->alpha + bounds->beta) >= kMaxSum) {
        throw std::invalid_argument("entry bounds too large for exhaustive enumeration");
    }

    const auto alphas = enumerate_sides(K, T, bounds->alpha);
    const auto betas = enumerate_sides(L, T, bounds->beta);

    SearchResult res;
    res.alpha_candidates = alphas.size();
    res.beta_candidates = betas.size();
    res.tables_examined = static_cast<std::uint64_t>(alphas.size()) * betas.size();
    res.best_N = std::numeric_limits<std::int64_t>::max();

    std::vector<std::pair<std::size_t, std::size_t>> best_pairs;
    for (std::size_t ia = 0; ia < alphas.size(); ++ia) {
        const Side& A = alphas[ia];
        for (std::size_t ib = 0; ib < betas.size(); ++ib) {
            const Side& B = betas[ib];
            if (std::gcd(A.gcd, B.gcd) != 1) continue;

            bool ok = true;
            for (Exponent x : A.prefix) {
                for (Exponent y : B.prefix) {
                    const Exponent n = x + y;
                    int reps = 0;
                    for (Exponent a : A.all) {
                        if (a <= n && B.mask.test(static_cast<std::size_t>(n - a)) && ++reps > 1) break;
                    }
                    if (reps != 1) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (!ok) continue;
            ++res.valid_tables;

            Mask sums;
            for (Exponent a : A.all) sums |= B.mask << static_cast<std::size_t>(a);
            const auto N = static_cast<std::int64_t>(sums.count());
            if (N < res.best_N) {
                res.best_N = N;
                best_pairs.clear();
            }
            if (N == res.best_N) best_pairs.emplace_back(ia, ib);
        }
    }
    if (res.valid_tables == 0) throw std::domain_error("no valid table within the entry bounds");

    for (auto [ia, ib] : best_pairs) {
        res.raw_optima.push_back(DegreeTable{K, L, T, alphas[ia].prefix, alphas[ia].suffix, betas[ib].prefix, betas[ib].suffix});
    }
    finalize(res);
    return res;
}

std::pair<std::int64_t, std::int64_t> fixed_prefix_window(int K, int L, int T)
{
    check_params(K, L, T);
    const std::int64_t kl = static_cast<std::int64_t>(K) * L;
    return {kl, T * (kl + T) + K - 1};
}

DegreeTable fixed_prefix_table(int K, int L, int T, const ExponentVector& alpha_s)
{
    check_params(K, L, T);
    DegreeTable t{K, L, T, {}, alpha_s, {}, {}};
    for (int k = 0; k < K; ++k) t.alpha_p.push_back(k);
    for (int l = 0; l < L; ++l) t.beta_p.push_back(static_cast<Exponent>(K) * l);
    for (int s = 0; s < T; ++s) t.beta_s.push_back(static_cast<Exponent>(K) * L + s);
    return t;
}

namespace {

// Multiplicity counts of the degree table entries built so far.
class EntryCounter {
public:
    EntryCounter(std::size_t size, ExponentVector beta) : count_(size, 0), beta_(std::move(beta)) {}

    void add_row(Exponent a)
    {
        for (Exponent b : beta_) {
            if (count_[static_cast<std::size_t>(a + b)]++ == 0) ++distinct_;
        }
    }

    void remove_row(Exponent a)
    {
        for (Exponent b : beta_) {
            if (--count_[static_cast<std::size_t>(a + b)] == 0) --distinct_;
        }
    }

    std::int64_t distinct() const { return distinct_; }

private:
    std::vector<std::uint32_t> count_;
    ExponentVector beta_;
    std::int64_t distinct_ = 0;
};

}  // namespace

SearchResult exhaustive_fixed_prefix(int K, int L, int T, std::uint64_t budget)
{
    const auto [lo, hi] = fixed_prefix_window(K, L, T);
    const DegreeTable base = fixed_prefix_table(K, L, T, {});
    const auto beta = base.beta();
    const Exponent gap = static_cast<Exponent>(K) * L + T;

    EntryCounter counter(static_cast<std::size_t>(hi + beta.back() + 1), beta);
    for (Exponent a : base.alpha_p) counter.add_row(a);

    SearchResult res;
    res.best_N = std::numeric_limits<std::int64_t>::max();
    std::uint64_t nodes = 0;
    ExponentVector chosen;

    auto rec = [&](auto&& self) -> void {
        if (res.partial) return;
        if (++nodes > budget) {
            res.partial = true;
            return;
        }
        const auto remaining = static_cast<std::int64_t>(T - chosen.size());
        // Each later row adds at least its largest entry, which is new.
        if (counter.distinct() + remaining > res.best_N) return;
        if (remaining == 0) {
            ++res.tables_examined;
            ++res.valid_tables;
            if (counter.distinct() < res.best_N) {
                res.best_N = counter.distinct();
                res.raw_optima.clear();
            }
            res.raw_optima.push_back(fixed_prefix_table(K, L, T, chosen));
            return;
        }
        const Exponent first = chosen.empty() ? lo : chosen.back() + 1;
        const Exponent last = chosen.empty() ? hi : std::min(hi, chosen.back() + gap);
        // Leave room for the rows still to come.
        for (Exponent s = first; s <= last && s + remaining - 1 <= hi; ++s) {
            chosen.push_back(s);
            counter.add_row(s);
            self(self);
            counter.remove_row(s);
            chosen.pop_back();
            if (res.partial) return;
        }
    };
    rec(rec);

    if (res.raw_optima.empty()) {
        if (res.partial) throw std::runtime_error("search budget exhausted before any table was completed");
        throw std::domain_error("no admissible alpha_s");
    }
    finalize(res);
    return res;
}

GreedyResult greedy(int K, int L, int T, const GreedyOptions& options)
{
    const auto [lo, hi] = fixed_prefix_window(K, L, T);
    const DegreeTable base = fixed_prefix_table(K, L, T, {});
    const auto beta = base.beta();
    const auto width = static_cast<std::size_t>(hi - lo + 1);
    const auto entries = static_cast<std::size_t>(hi + beta.back() + 1);

    std::vector<std::uint8_t> present(entries, 0);
    std::vector<std::int64_t> overlap(width, 0);  // |(i + beta) ∩ P| for i = lo + index
    std::vector<std::uint8_t> used(width, 0);
    std::int64_t size = 0;

    // Marks the new entries of row a and returns them for undo.
    auto add_row = [&](Exponent a) {
        ExponentVector fresh;
        for (Exponent b : beta) {
            const auto e = static_cast<std::size_t>(a + b);
            if (present[e]) continue;
            present[e] = 1;
            ++size;
            fresh.push_back(a + b);
            for (Exponent b2 : beta) {
                const Exponent i = a + b - b2;
                if (i >= lo && i <= hi) ++overlap[static_cast<std::size_t>(i - lo)];
            }
        }
        return fresh;
    };
    auto undo_row = [&](const ExponentVector& fresh) {
        for (Exponent e : fresh) {
            present[static_cast<std::size_t>(e)] = 0;
            --size;
            for (Exponent b2 : beta) {
                const Exponent i = e - b2;
                if (i >= lo && i <= hi) --overlap[static_cast<std::size_t>(i - lo)];
            }
        }
    };

    for (Exponent a : base.alpha_p) add_row(a);

    GreedyResult best;
    best.N = std::numeric_limits<std::int64_t>::max();
    ExponentVector chosen;

    auto rec = [&](auto&& self) -> void {
        if (best.budget_exhausted) return;
        if (++best.nodes > options.budget) {
            best.budget_exhausted = true;
            return;
        }
        const auto remaining = static_cast<std::int64_t>(T - chosen.size());
        if (remaining == 0) {
            if (size < best.N) {
                best.N = size;
                best.alpha_s = chosen;
            }
            return;
        }
        // A strict improvement needs every remaining row to add a new entry.
        if (size + remaining >= best.N) return;

        std::int64_t top = -1;
        std::vector<std::size_t> branch;
        for (std::size_t i = 0; i < width; ++i) {
            if (used[i]) continue;
            if (overlap[i] > top) {
                top = overlap[i];
                branch.clear();
            }
            if (overlap[i] == top) branch.push_back(i);
        }
        if (options.beam_width > 0 && branch.size() > options.beam_width) branch.resize(options.beam_width);

        for (std::size_t i : branch) {
            const Exponent a = lo + static_cast<Exponent>(i);
            used[i] = 1;
            chosen.push_back(a);
            const auto fresh = add_row(a);
            self(self);
            undo_row(fresh);
            chosen.pop_back();
            used[i] = 0;
            if (best.budget_exhausted) return;
        }
    };
    rec(rec);

    std::sort(best.alpha_s.begin(), best.alpha_s.end());
    return best;
}

}  // namespace degtab
