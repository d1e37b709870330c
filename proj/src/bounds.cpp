#include "degtab/bounds.hpp"

#include "degtab/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace degtab {

void MatrixDims::check() const
{
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("matrix dimensions must be positive");
    if (!is_prime(q)) throw std::invalid_argument("q=" + std::to_string(q) + " is not prime");
}

LowerBounds lower_bounds(int K, int L, int T)
{
    if (K < 1 || L < 1 || T < 1) throw std::invalid_argument("K, L and T must be positive");
    const std::int64_t k = K, l = L, t = T;
    const std::int64_t kl = k * l;
    const std::int64_t big = std::max(k, l);

    LowerBounds lb;
    lb.ineq1 = kl + big + 2 * t - 1;
    lb.ineq2_large_product = 3 * big + 3 * t - 2 < kl;
    lb.ineq2_square = 2 <= k && k == l;
    if (lb.ineq2_large_product || lb.ineq2_square) lb.ineq2 = kl + big + 2 * t;
    lb.ineq3 = kl + k + l + 2 * t - 1 - t * std::min({k, l, t});
    lb.best = std::max({lb.ineq1, lb.ineq2.value_or(0), lb.ineq3});
    return lb;
}

std::optional<EntryBounds> entry_upper_bounds(int K, int L, int T)
{
    if (K < 1 || L < 1 || T < 1) throw std::invalid_argument("K, L and T must be positive");
    const std::int64_t k = K, l = L, t = T;
    if (2 * k * l - k - l - std::min(k, l) + 3 > t) return std::nullopt;
    return EntryBounds{2 * k * l + t - 1 - l, 2 * k * l + t - 1 - k};
}

std::optional<EntryBounds> large_t_entry_bound(const DegreeTable& table, std::int64_t N)
{
    if (!is_normal(table)) throw std::invalid_argument("large-T entry bound requires a normal table");
    const auto a = table.alpha();
    const auto b = table.beta();
    const Exponent amax = *std::max_element(a.begin(), a.end());
    const Exponent bmax = *std::max_element(b.begin(), b.end());
    const std::int64_t delta = amax == bmax ? 1 : 0;
    const std::int64_t k = table.K, l = table.L, t = table.T;
    if (N > k + l + std::min(k, l) + 3 * t - 3 - delta) return std::nullopt;
    return EntryBounds{N - l - t, N - k - t};
}

namespace {

constexpr double kMaxThresholdBits = 67108864.0;

std::uint64_t operation_count(const MatrixDims& d)
{
    d.check();
    const auto ops = 2 * d.a * d.b * d.c - d.a * d.c;
    return static_cast<std::uint64_t>(ops);
}

}  // namespace

BigInt operational_threshold(const MatrixDims& dims)
{
    const auto e = operation_count(dims);
    if (static_cast<double>(e) * std::log2(static_cast<double>(dims.q)) > kMaxThresholdBits) {
        throw std::length_error("operational threshold has more than 2^26 bits; use the comparison predicate");
    }
    BigInt p = boost::multiprecision::pow(BigInt(dims.q), static_cast<unsigned>(e));
    return p - 2;
}

bool exceeds_operational_threshold(const BigInt& entry, const MatrixDims& dims)
{
    const auto e = operation_count(dims);
    if (entry < 0) return false;
    // entry >= q^e - 2  <=>  log(entry + 2) >= e log q
    const double lhs = std::log(BigInt(entry + 2).convert_to<double>());
    const double rhs = static_cast<double>(e) * std::log(static_cast<double>(dims.q));
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, rhs)) return lhs > rhs;
    return entry >= operational_threshold(dims);
}

BoundsReport bounds_report(int K, int L, int T, const std::optional<MatrixDims>& dims)
{
    BoundsReport r;
    r.K = K;
    r.L = L;
    r.T = T;
    r.lower = lower_bounds(K, L, T);
    r.entry = entry_upper_bounds(K, L, T);
    if (dims) r.operational_threshold = operational_threshold(*dims);
    return r;
}

}  // namespace degtab
