#pragma once

#include "degtab/degree_table.hpp"
#include "degtab/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace degtab {

using BigInt = boost::multiprecision::cpp_int;

struct LowerBounds {
    std::int64_t ineq1 = 0;
    std::optional<std::int64_t> ineq2;
    std::int64_t ineq3 = 0;
    std::int64_t best = 0;
    // Which of the two alternative conditions enabled ineq2.
    bool ineq2_large_product = false;  // 3 max{K,L} + 3T - 2 < KL
    bool ineq2_square = false;         // 2 <= K = L
};

struct EntryBounds {
    std::int64_t alpha = 0;
    std::int64_t beta = 0;

    friend bool operator==(const EntryBounds&, const EntryBounds&) = default;
};

/// A x b times b x c over F_q.
struct MatrixDims {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t c = 1;
    std::uint64_t q = 2;

    void check() const;
};

struct BoundsReport {
    int K = 0;
    int L = 0;
    int T = 0;
    LowerBounds lower;
    std::optional<EntryBounds> entry;
    std::optional<BigInt> operational_threshold;
};

/// The three lower bounds on N for any degree table with parameters K, L, T.
LowerBounds lower_bounds(int K, int L, int T);

/// Upper bounds on the largest alpha and beta entries of an optimal normal
/// table. Present only when 2KL - K - L - min{K,L} + 3 <= T.
std::optional<EntryBounds> entry_upper_bounds(int K, int L, int T);

/// Entry bounds of a normal table whose N is small enough, or nothing.
/// Throws std::invalid_argument if the table is not normal.
std::optional<EntryBounds> large_t_entry_bound(const DegreeTable& table, std::int64_t N);

/// q^(2abc - ac) - 2: an entry this large makes local multiplication cheaper.
BigInt operational_threshold(const MatrixDims& dims);

/// entry >= operational_threshold(dims), decided in the log domain and
/// falling back to exact arithmetic near the boundary.
bool exceeds_operational_threshold(const BigInt& entry, const MatrixDims& dims);

BoundsReport bounds_report(int K, int L, int T, const std::optional<MatrixDims>& dims = std::nullopt);

}  // namespace degtab
