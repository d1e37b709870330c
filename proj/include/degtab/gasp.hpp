#pragma once

#include "degtab/degree_table.hpp"
#include "degtab/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace degtab {

/// Parameters of one GASP_r code. The code family assumes L <= K; inputs with
/// K < L are normalized by swapping the roles of A and B.
struct GaspParams {
    int K = 1;
    int L = 1;
    int T = 1;
    int r = 1;

    /// Returns the parameters with L <= K and whether K and L were swapped.
    std::pair<GaspParams, bool> normalized() const;

    /// Throws std::invalid_argument unless K, L, T >= 1 and
    /// 1 <= r <= min{K, T} (after normalization).
    void check() const;
};

/// Raised when the monolithic N formula does not produce an integer.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exponent vectors of GASP_r. The suffix alpha_s is the T smallest elements
/// of KL + {0..r-1} + K*Z>=0. The returned table has L <= K.
DegreeTable construct(const GaspParams& params);

/// Whether construct() had to swap K and L.
bool is_transposed(const GaspParams& params);

/// Left/right scores from their closed forms.
ScoreBreakdown score_closed_form(const GaspParams& params);

/// N(r) = KL + K + T - 1 + T(L + T) - S(r).
std::int64_t n_of_r(const GaspParams& params);

/// N(r) from the single closed-form expression in (K, L, T, r). Fractional
/// subterms are evaluated exactly; throws ConsistencyError if the total is
/// not an integer.
std::int64_t n_monolithic(const GaspParams& params);

/// Derived quantities shared by the closed forms.
struct ChainConstants {
    std::int64_t phi = 0;  // T - 1 - KL + 2K
    std::int64_t mu = 0;   // (T - 1) mod K
    std::int64_t x = 0;    // min{(T-1-mu)/K - [mu = 0], L - 3}
};

ChainConstants chain_constants(int K, int L, int T);

/// Piecewise-linear surrogate H(r) whose argmin over
/// max{1, phi+1} <= r <= min{K, T} equals that of N(r).
Rational h_function(int K, int L, int T, int r);

struct ChainSearchTrace {
    ChainConstants constants;
    std::set<std::int64_t> W;
    std::map<std::int64_t, std::set<std::int64_t>> Qw;
    std::set<std::int64_t> Q;
    std::set<std::int64_t> Q_prime;
    std::set<std::int64_t> Q_double_prime;
    std::vector<std::pair<int, std::int64_t>> evaluated;
    int r_star = 0;
};

/// Builds W, the per-w candidate sets Q_w, and the reduced candidate set Q''.
/// Q'' can miss every minimizer when T > K; see optimal_r().
ChainSearchTrace candidate_set(int K, int L, int T);

enum class SearchMode { FullScan, Reduced };

struct OptimalChain {
    int r_star = 0;
    std::int64_t N = 0;
    std::vector<int> minimizers;  // among the evaluated r
    ChainSearchTrace trace;
};

/// r* = argmin N(r); ties resolve to the smallest r. Reduced mode evaluates
/// Q'' plus min{K, T}.
OptimalChain optimal_r(int K, int L, int T, SearchMode mode = SearchMode::Reduced);

/// |W| for (K, L, T), computed without materializing W.
std::int64_t w_count(int K, int L, int T);

/// Mean of (5 + |W|) / min{K, T} over 1 <= L <= K <= max_k, 1 <= T <= max_t.
/// The sum is accumulated exactly and returned as mean = numerator/denominator.
struct ReductionStatistic {
    double mean = 0.0;
    std::uint64_t triples = 0;
};

ReductionStatistic reduction_statistic(int max_k, int max_t);

}  // namespace degtab
