#include "degtab/costmodel.hpp"

#include <algorithm>
#include <stdexcept>

namespace degtab {

ConcreteCosts concrete_costs(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t K, std::int64_t L, std::int64_t M,
                             std::int64_t N_outer, std::int64_t N_inner)
{
    for (auto v : {a, b, c, K, L, M, N_outer, N_inner}) {
        if (v < 1) throw std::invalid_argument("cost parameters must be positive");
    }
    ConcreteCosts r;
    r.upload_outer = Rational(N_outer) * (Rational(a * b, K) + Rational(b * c, L));
    r.download_outer = Rational(N_outer * a * c, K * L);
    r.upload_inner = Rational(N_inner * (a * b + b * c), M);
    r.download_inner = Rational(N_inner) * Rational(a * c);
    return r;
}

void CostExponents::check() const
{
    for (const auto* x : {&a, &b, &c, &K, &L, &M}) {
        if (x->numerator() < 0) throw std::invalid_argument("exponents must be non-negative");
    }
    if (K > a) throw std::invalid_argument("need eps_K <= eps_a");
    if (L > c) throw std::invalid_argument("need eps_L <= eps_c");
    if (M > b) throw std::invalid_argument("need eps_M <= eps_b");
    if (K + L != M) throw std::invalid_argument("need eps_K + eps_L = eps_M");
}

AsymptoticComparison asymptotic_compare(const CostExponents& e)
{
    e.check();
    AsymptoticComparison r;
    // With T constant, N_O grows like KL and N_I like M.
    r.outer = std::max(std::max(e.a + e.b + e.L, e.b + e.c + e.K), e.a + e.c);
    r.inner = std::max(std::max(e.a + e.b, e.b + e.c), e.a + e.c + e.M);
    r.outer_wins = e.b <= std::min(e.a + e.L, e.c + e.K);
    return r;
}

}  // namespace degtab
