#pragma once

#include "degtab/bounds.hpp"
#include "degtab/degree_table.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace degtab {

struct SearchResult {
    std::int64_t best_N = 0;
    /// Optimal tables up to equivalence, as canonical forms, sorted.
    std::vector<DegreeTable> optima;
    /// Every optimal table found in the searched representation (normal
    /// tables for exhaustive(), fixed-prefix tables otherwise), sorted.
    std::vector<DegreeTable> raw_optima;
    std::uint64_t tables_examined = 0;
    std::uint64_t valid_tables = 0;
    /// Sorted-block vectors per side before pairing (exhaustive() only).
    std::uint64_t alpha_candidates = 0;
    std::uint64_t beta_candidates = 0;
    bool partial = false;
};

/// Enumerates every normal table whose alpha (beta) entries do not exceed the
/// given bounds. Without explicit bounds the large-T entry bounds are used;
/// throws std::invalid_argument when their precondition fails.
SearchResult exhaustive(int K, int L, int T, std::optional<EntryBounds> bounds = std::nullopt);

/// Fixes alpha_p = (0..K-1), beta_p = (0, K, .., K(L-1)), beta_s = (KL..KL+T-1)
/// and enumerates increasing alpha_s inside the admissible window with
/// consecutive gaps at most KL + T. Stops after `budget` search nodes and
/// flags the result as partial.
SearchResult exhaustive_fixed_prefix(int K, int L, int T, std::uint64_t budget = 50'000'000);

/// Smallest and largest admissible alpha_s entry for the fixed prefix:
/// {KL, ..., T(KL+T) + K - 1}.
std::pair<std::int64_t, std::int64_t> fixed_prefix_window(int K, int L, int T);

/// The fixed-prefix table for a given alpha_s.
DegreeTable fixed_prefix_table(int K, int L, int T, const ExponentVector& alpha_s);

struct GreedyOptions {
    std::uint64_t budget = 2'000'000;  // search nodes
    std::size_t beam_width = 0;        // 0: branch on every maximizer
};

struct GreedyResult {
    ExponentVector alpha_s;  // sorted
    std::int64_t N = 0;
    std::uint64_t nodes = 0;
    bool budget_exhausted = false;
};

/// Depth-first search over alpha_s that only branches on candidates whose
/// row overlaps the table built so far the most.
GreedyResult greedy(int K, int L, int T, const GreedyOptions& options = {});

}  // namespace degtab
