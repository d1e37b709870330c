#pragma once

#include "degtab/rational.hpp"

#include <cstdint>

namespace degtab {

struct ConcreteCosts {
    Rational upload_outer;    // U_O = N_O (ab/K + bc/L)
    Rational download_outer;  // D_O = N_O ac / (KL)
    Rational upload_inner;    // U_I = N_I (ab + bc) / M
    Rational download_inner;  // D_I = N_I ac
    Rational total_outer() const { return upload_outer + download_outer; }
    Rational total_inner() const { return upload_inner + download_inner; }
};

/// Exact upload and download costs of outer (K x L blocks) and inner
/// (M blocks along the shared dimension) partitioning.
ConcreteCosts concrete_costs(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t K, std::int64_t L,
                             std::int64_t M, std::int64_t N_outer, std::int64_t N_inner);

/// Growth exponents in n of a, b, c and of the partition counts K, L, M.
struct CostExponents {
    Rational a{0}, b{0}, c{0};
    Rational K{0}, L{0}, M{0};

    /// Throws std::invalid_argument unless every exponent is non-negative,
    /// K <= a, L <= c, M <= b and K + L = M.
    void check() const;
};

struct AsymptoticComparison {
    Rational outer;
    Rational inner;
    bool outer_wins = false;
};

/// Exponents of the total communication of both schemes. outer_wins is the
/// closed-form predicate b <= min{a + L, c + K}.
AsymptoticComparison asymptotic_compare(const CostExponents& e);

}  // namespace degtab
