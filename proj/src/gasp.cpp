#include "degtab/gasp.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>

namespace degtab {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::pair<GaspParams, bool> GaspParams::normalized() const
{
    if (K >= L) return {*this, false};
    return {GaspParams{L, K, T, r}, true};
}

void GaspParams::check() const
{
    if (K < 1 || L < 1 || T < 1) throw std::invalid_argument("K, L and T must be positive");
    const auto [p, swapped] = normalized();
    if (r < 1 || r > std::min(p.K, p.T)) {
        throw std::invalid_argument("chain length r=" + std::to_string(r) + " outside 1.." +
                                    std::to_string(std::min(p.K, p.T)));
    }
}

bool is_transposed(const GaspParams& params) { return params.normalized().second; }

DegreeTable construct(const GaspParams& params)
{
    params.check();
    const auto p = params.normalized().first;
    const Exponent K = p.K;
    const Exponent L = p.L;
    const Exponent T = p.T;

    DegreeTable t;
    t.K = p.K;
    t.L = p.L;
    t.T = p.T;
    for (Exponent k = 0; k < K; ++k) t.alpha_p.push_back(k);
    for (Exponent j = 0; j < T; ++j) t.alpha_s.push_back(K * L + K * (j / p.r) + j % p.r);
    for (Exponent l = 0; l < L; ++l) t.beta_p.push_back(K * l);
    for (Exponent j = 0; j < T; ++j) t.beta_s.push_back(K * L + j);
    return t;
}

ScoreBreakdown score_closed_form(const GaspParams& params)
{
    params.check();
    const auto p = params.normalized().first;
    const std::int64_t K = p.K, L = p.L, T = p.T, r = p.r;

    ScoreBreakdown s;
    for (std::int64_t i = 1; i <= T; ++i) {
        const std::int64_t left = i <= r ? std::min(L, 2 + floor_div(T - 1 - i, K)) : L;
        std::int64_t right = 0;
        if (i == 1) {
            right = std::max<std::int64_t>(0, K + T - K * L - 1);
        } else if ((i - 1) % r == 0) {
            right = std::max<std::int64_t>(0, T - K + r - 1);
        } else {
            right = T - 1;
        }
        s.left.push_back(left);
        s.right.push_back(right);
        s.total += left + right;
    }
    return s;
}

std::int64_t n_of_r(const GaspParams& params)
{
    const auto p = params.normalized().first;
    const std::int64_t K = p.K, L = p.L, T = p.T;
    return K * L + K + T - 1 + T * (L + T) - score_closed_form(params).total;
}

ChainConstants chain_constants(int K, int L, int T)
{
    if (K < L) std::swap(K, L);
    ChainConstants c;
    c.phi = std::int64_t{T} - 1 - std::int64_t{K} * L + 2 * std::int64_t{K};
    c.mu = (T - 1) % K;
    c.x = std::min<std::int64_t>((T - 1 - c.mu) / K - (c.mu == 0 ? 1 : 0), L - 3);
    return c;
}

std::int64_t n_monolithic(const GaspParams& params)
{
    params.check();
    const auto p = params.normalized().first;
    const std::int64_t K = p.K, L = p.L, T = p.T, r = p.r;
    const auto [phi, mu, x] = chain_constants(p.K, p.L, p.T);

    Rational n(K * L + 2 * K + 3 * T - 2 - std::max(K, phi));
    n += (L - 2) * std::max<std::int64_t>(0, std::min(r, r - phi));
    n += ((T - 1) / r) * std::min(T - 1, K - r);

    if (phi < r) {
        Rational bracket(std::min<std::int64_t>(0, mu - r));
        bracket += Rational(r * (T - 1 - mu), K);
        bracket += Rational(-K * x * x + (-K - 2 * std::max<std::int64_t>(0, phi) + 2 * T - 2) * x + T - 1 - mu, 2);
        bracket -= Rational(T - 1 - mu, K) * Rational(T - 1 + mu, 2);
        n -= bracket;
    }

    if (n.denominator() != 1) {
        throw ConsistencyError("closed-form N is not integral: " + to_string(n) + " for K=" + std::to_string(K) +
                               " L=" + std::to_string(L) + " T=" + std::to_string(T) + " r=" + std::to_string(r));
    }
    return n.numerator();
}

Rational h_function(int K, int L, int T, int r)
{
    if (K < L) std::swap(K, L);
    const auto c = chain_constants(K, L, T);
    const std::int64_t lo = std::max<std::int64_t>(1, c.phi + 1);
    const std::int64_t hi = std::min(K, T);
    if (r < lo || r > hi) {
        throw std::invalid_argument("H(r) defined only for " + std::to_string(lo) + " <= r <= " + std::to_string(hi));
    }
    Rational slope = Rational(L - 2) - Rational(T - 1 - c.mu, K);
    Rational h = slope * r;
    h += std::max<std::int64_t>(c.mu, r);
    h += std::int64_t{(T - 1) / r} * std::min(T - 1, K - r);
    return h;
}

ChainSearchTrace candidate_set(int K, int L, int T)
{
    if (K < 1 || L < 1 || T < 1) throw std::invalid_argument("K, L and T must be positive");
    if (K < L) std::swap(K, L);

    ChainSearchTrace tr;
    tr.constants = chain_constants(K, L, T);
    const std::int64_t phi = tr.constants.phi;
    const std::int64_t mu = tr.constants.mu;
    const std::int64_t n = T - 1;

    for (std::int64_t i = std::max<std::int64_t>(1, phi + 1); i <= std::min(K, T - 1); ++i) {
        tr.W.insert(n / i);
    }

    const Rational base = Rational(L - 2) - Rational(T - 1 - mu, K);
    for (std::int64_t w : tr.W) {
        const std::int64_t lw = n / (w + 1) + 1;
        const std::int64_t rw = n / w;
        std::set<std::int64_t> aw;
        for (std::int64_t cand : {mu, std::int64_t{K} - T + 1}) {
            if (cand >= lw + 1 && cand <= rw - 1) aw.insert(cand);
        }
        auto slope = [&](std::int64_t r) {
            return base + Rational(mu < r ? 1 : 0) - Rational(K - T + 1 < r ? w : 0);
        };
        const bool left_up = slope(lw) >= Rational(0);
        const bool right_up = slope(rw) >= Rational(0);

        // First matching clause wins.
        std::set<std::int64_t> q;
        if (rw < lw) {
        } else if (lw == rw) {
            q = {lw};
        } else if (!aw.empty() && left_up && right_up) {
            q = {lw};
        } else if (!aw.empty() && left_up && !right_up) {
            q = {lw, rw};
        } else if (!aw.empty() && !left_up && right_up) {
            q = aw;
        } else if (!aw.empty()) {
            q = {rw};
        } else if (left_up) {
            q = {lw};
        } else {
            q = {rw};
        }
        tr.Q.insert(q.begin(), q.end());
        tr.Qw[w] = std::move(q);
    }

    tr.Q_prime = {std::max<std::int64_t>(1, std::min<std::int64_t>({K, T, phi})), std::max<std::int64_t>(1, phi + 1),
                  std::int64_t{T}};
    const std::int64_t r_max = std::min(K, T);
    for (const auto* src : {&tr.Q, &tr.Q_prime}) {
        for (std::int64_t r : *src) {
            if (r >= 1 && r <= r_max) tr.Q_double_prime.insert(r);
        }
    }
    return tr;
}

OptimalChain optimal_r(int K, int L, int T, SearchMode mode)
{
    OptimalChain out;
    out.trace = candidate_set(K, L, T);
    const int r_max = std::min(std::max(K, L), T);

    std::vector<int> rs;
    if (mode == SearchMode::FullScan) {
        for (int r = 1; r <= r_max; ++r) rs.push_back(r);
    } else {
        // Q'' alone misses the clipped right end of the last piece when T > K,
        // e.g. (4,4,11) where only r = 4 is optimal.
        std::set<std::int64_t> q = out.trace.Q_double_prime;
        q.insert(r_max);
        for (auto r : q) rs.push_back(static_cast<int>(r));
    }

    out.N = std::numeric_limits<std::int64_t>::max();
    for (int r : rs) {
        const auto n = n_of_r({K, L, T, r});
        out.trace.evaluated.emplace_back(r, n);
        if (n < out.N) {
            out.N = n;
            out.minimizers = {r};
        } else if (n == out.N) {
            out.minimizers.push_back(r);
        }
    }
    out.r_star = out.minimizers.front();
    out.trace.r_star = out.r_star;
    return out;
}

std::int64_t w_count(int K, int L, int T)
{
    if (K < L) std::swap(K, L);
    const auto c = chain_constants(K, L, T);
    const std::int64_t n = T - 1;
    const std::int64_t hi = std::min<std::int64_t>(K, n);
    std::int64_t count = 0;
    for (std::int64_t i = std::max<std::int64_t>(1, c.phi + 1); i <= hi;) {
        const std::int64_t v = n / i;
        ++count;
        i = n / v + 1;
    }
    return count;
}

ReductionStatistic reduction_statistic(int max_k, int max_t)
{
    // Numerators grouped by denominator min{K, T}, summed exactly at the end.
    std::vector<std::uint64_t> numer(static_cast<std::size_t>(std::max(max_k, max_t)) + 1, 0);
    std::uint64_t triples = 0;
    for (int K = 1; K <= max_k; ++K) {
        for (int L = 1; L <= K; ++L) {
            for (int T = 1; T <= max_t; ++T) {
                numer[std::min(K, T)] += 5 + static_cast<std::uint64_t>(w_count(K, L, T));
                ++triples;
            }
        }
    }
    using boost::multiprecision::cpp_rational;
    cpp_rational sum = 0;
    for (std::size_t d = 1; d < numer.size(); ++d) {
        if (numer[d] != 0) sum += cpp_rational(numer[d], d);
    }
    sum /= triples;
    return {sum.convert_to<double>(), triples};
}

}  // namespace degtab
