#include "degtab/sdmm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace degtab {

Partition partition(const Matrix& A, const Matrix& B, int K, int L)
{
    if (K < 1 || L < 1) throw std::invalid_argument("K and L must be positive");
    if (A.cols != B.rows) throw std::invalid_argument("inner dimensions differ");
    if (A.rows % static_cast<std::size_t>(K) != 0) {
        throw std::invalid_argument("K=" + std::to_string(K) + " does not divide " + std::to_string(A.rows) + " rows");
    }
    if (B.cols % static_cast<std::size_t>(L) != 0) {
        throw std::invalid_argument("L=" + std::to_string(L) + " does not divide " + std::to_string(B.cols) + " columns");
    }
    Partition p;
    const auto ra = A.rows / K;
    for (int k = 0; k < K; ++k) {
        Matrix blk(ra, A.cols);
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < A.cols; ++j) blk(i, j) = A(k * ra + i, j);
        p.A.push_back(std::move(blk));
    }
    const auto cb = B.cols / L;
    for (int l = 0; l < L; ++l) {
        Matrix blk(B.rows, cb);
        for (std::size_t i = 0; i < B.rows; ++i)
            for (std::size_t j = 0; j < cb; ++j) blk(i, j) = B(i, l * cb + j);
        p.B.push_back(std::move(blk));
    }
    return p;
}

Matrix assemble(const std::vector<std::vector<Matrix>>& blocks)
{
    if (blocks.empty() || blocks.front().empty()) throw std::invalid_argument("no blocks");
    const auto br = blocks[0][0].rows, bc = blocks[0][0].cols;
    Matrix out(br * blocks.size(), bc * blocks[0].size());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        for (std::size_t l = 0; l < blocks[k].size(); ++l) {
            const auto& b = blocks[k][l];
            if (b.rows != br || b.cols != bc) throw std::invalid_argument("blocks of different shapes");
            for (std::size_t i = 0; i < br; ++i)
                for (std::size_t j = 0; j < bc; ++j) out(k * br + i, l * bc + j) = b(i, j);
        }
    }
    return out;
}

namespace {

std::uint64_t power(const PrimeField& f, std::uint64_t x, Exponent e)
{
    // x is non-zero, so exponents may be reduced mod q - 1.
    return f.pow(x, static_cast<std::uint64_t>(e) % (f.modulus() - 1));
}

bool subset_secure(const PrimeField& f, const DegreeTable& t, const std::vector<std::uint64_t>& points,
                   const std::vector<std::size_t>& subset)
{
    const auto T = static_cast<std::size_t>(t.T);
    for (const auto* exps : {&t.alpha_s, &t.beta_s}) {
        Matrix m(T, T);
        for (std::size_t i = 0; i < T; ++i)
            for (std::size_t j = 0; j < T; ++j) m(i, j) = power(f, points[subset[i]], (*exps)[j]);
        if (!is_invertible(f, std::move(m))) return false;
    }
    return true;
}

// C(n, k), saturating at `cap`.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

SecurityReport security_check(const PrimeField& field, const DegreeTable& table, const std::vector<std::uint64_t>& points,
                              const SecurityOptions& options)
{
    check_structure(table);
    const auto n = points.size();
    const auto T = static_cast<std::size_t>(table.T);
    if (n < T) throw std::invalid_argument("fewer servers than colluders");
    for (auto p : points) {
        if (p % field.modulus() == 0) throw std::invalid_argument("evaluation points must be non-zero");
    }

    SecurityReport rep;
    auto record = [&](const std::vector<std::size_t>& subset) {
        ++rep.subsets_checked;
        if (subset_secure(field, table, points, subset)) return;
        ++rep.failure_count;
        if (rep.failures.size() < 64) rep.failures.push_back(subset);
    };

    if (binomial_capped(n, T, options.exhaustive_limit) <= options.exhaustive_limit) {
        rep.exhaustive = true;
        std::vector<std::size_t> subset(T);
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            record(subset);
            // Next combination in lexicographic order.
            std::size_t i = T;
            while (i > 0 && subset[i - 1] == n - T + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < T; ++j) subset[j] = subset[j - 1] + 1;
        }
        return rep;
    }

    std::mt19937_64 rng(options.seed);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
        for (std::size_t i = 0; i < T; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        std::vector<std::size_t> subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(T));
        std::sort(subset.begin(), subset.end());
        record(subset);
    }
    return rep;
}

std::vector<Exponent> product_degrees(const DegreeTable& table)
{
    const auto a = table.alpha();
    const auto b = table.beta();
    return sumset(a, b);
}

namespace {

Matrix interpolation_matrix(const PrimeField& f, const std::vector<Exponent>& degrees, const std::vector<std::uint64_t>& points)
{
    Matrix v(points.size(), degrees.size());
    for (std::size_t n = 0; n < points.size(); ++n)
        for (std::size_t e = 0; e < degrees.size(); ++e) v(n, e) = power(f, points[n], degrees[e]);
    return v;
}

}  // namespace

bool decodable_points(const PrimeField& field, const DegreeTable& table, const std::vector<std::uint64_t>& points)
{
    const auto degrees = product_degrees(table);
    if (points.size() != degrees.size()) return false;
    return is_invertible(field, interpolation_matrix(field, degrees, points));
}

FieldChoice choose_field_and_points(const DegreeTable& table, std::uint64_t base_q, std::uint64_t seed, int max_attempts)
{
    require_valid(table);
    const auto N = static_cast<std::uint64_t>(count_distinct(table));
    const auto M = static_cast<std::uint64_t>(table.max_entry());
    const std::uint64_t q = next_prime(std::max({base_q, M + 2, N + 1}));

    FieldChoice choice;
    choice.field = PrimeField(q);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(1, q - 1);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::set<std::uint64_t> seen;
        std::vector<std::uint64_t> points;
        while (points.size() < N) {
            const auto x = dist(rng);
            if (seen.insert(x).second) points.push_back(x);
        }
        choice.attempts = attempt;
        if (!decodable_points(choice.field, table, points)) continue;
        auto sec = security_check(choice.field, table, points, {.seed = seed});
        if (!sec.passed()) continue;
        choice.points = std::move(points);
        choice.security = std::move(sec);
        return choice;
    }
    throw std::runtime_error("no admissible evaluation points in F_" + std::to_string(q) + " after " +
                             std::to_string(max_attempts) + " attempts; try a larger base q");
}

std::vector<Share> encode(const PrimeField& field, const DegreeTable& table, const Partition& data,
                          const std::vector<Matrix>& R, const std::vector<Matrix>& S, const std::vector<std::uint64_t>& points)
{
    check_structure(table);
    if (data.A.size() != static_cast<std::size_t>(table.K) || data.B.size() != static_cast<std::size_t>(table.L) ||
        R.size() != static_cast<std::size_t>(table.T) || S.size() != static_cast<std::size_t>(table.T)) {
        throw std::invalid_argument("block counts do not match the table");
    }
    std::vector<Share> shares;
    shares.reserve(points.size());
    for (auto x : points) {
        if (x % field.modulus() == 0) throw std::invalid_argument("evaluation points must be non-zero");
        Share s{Matrix(data.A[0].rows, data.A[0].cols), Matrix(data.B[0].rows, data.B[0].cols)};
        auto accumulate = [&](Matrix& acc, const Matrix& blk, Exponent e) { acc = add(field, acc, scale(field, blk, power(field, x, e))); };
        for (int k = 0; k < table.K; ++k) accumulate(s.f, data.A[k], table.alpha_p[k]);
        for (int t = 0; t < table.T; ++t) accumulate(s.f, R[t], table.alpha_s[t]);
        for (int l = 0; l < table.L; ++l) accumulate(s.g, data.B[l], table.beta_p[l]);
        for (int t = 0; t < table.T; ++t) accumulate(s.g, S[t], table.beta_s[t]);
        shares.push_back(std::move(s));
    }
    return shares;
}

std::vector<Matrix> server_compute(const PrimeField& field, const std::vector<Share>& shares)
{
    std::vector<Matrix> out;
    out.reserve(shares.size());
    for (const auto& s : shares) out.push_back(multiply(field, s.f, s.g));
    return out;
}

SdmmInstance make_instance(const PrimeField& field, const DegreeTable& table, Matrix A, Matrix B,
                           std::vector<std::uint64_t> points, std::uint64_t seed, const InstanceOptions& options)
{
    require_valid(table);
    const auto parts = partition(A, B, table.K, table.L);
    if (points.size() != static_cast<std::size_t>(count_distinct(table))) {
        throw std::invalid_argument("need exactly N evaluation points");
    }
    if (std::set<std::uint64_t>(points.begin(), points.end()).size() != points.size()) {
        throw std::invalid_argument("evaluation points must be distinct");
    }

    SdmmInstance inst;
    inst.field = field;
    inst.dims = {A.rows, A.cols, B.cols};
    inst.table = table;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < table.T; ++t) {
        inst.R.push_back(options.zero_masks ? Matrix(parts.A[0].rows, parts.A[0].cols)
                                            : random_matrix(field, parts.A[0].rows, parts.A[0].cols, rng));
    }
    for (int t = 0; t < table.T; ++t) {
        inst.S.push_back(options.zero_masks ? Matrix(parts.B[0].rows, parts.B[0].cols)
                                            : random_matrix(field, parts.B[0].rows, parts.B[0].cols, rng));
    }
    inst.shares = encode(field, table, parts, inst.R, inst.S, points);
    inst.points = std::move(points);
    inst.A = std::move(A);
    inst.B = std::move(B);
    return inst;
}

DecodeResult decode(const SdmmInstance& inst)
{
    const auto& f = inst.field;
    const auto degrees = product_degrees(inst.table);
    if (inst.responses.size() != degrees.size() || inst.points.size() != degrees.size()) {
        throw std::invalid_argument("need one response per server");
    }
    const auto br = inst.responses.front().rows, bc = inst.responses.front().cols;
    Matrix rhs(degrees.size(), br * bc);
    for (std::size_t n = 0; n < degrees.size(); ++n) {
        const auto& r = inst.responses[n];
        if (r.rows != br || r.cols != bc) throw std::invalid_argument("responses of different shapes");
        std::copy(r.data.begin(), r.data.end(), rhs.data.begin() + static_cast<std::ptrdiff_t>(n * br * bc));
    }
    auto coeffs = solve(f, interpolation_matrix(f, degrees, inst.points), std::move(rhs));
    if (!coeffs) throw std::runtime_error("interpolation matrix is singular");

    DecodeResult res;
    std::vector<std::vector<Matrix>> grid(inst.table.K, std::vector<Matrix>(inst.table.L));
    for (int k = 0; k < inst.table.K; ++k) {
        for (int l = 0; l < inst.table.L; ++l) {
            const Exponent d = inst.table.alpha_p[k] + inst.table.beta_p[l];
            const auto row = static_cast<std::size_t>(std::lower_bound(degrees.begin(), degrees.end(), d) - degrees.begin());
            Matrix blk(br, bc);
            std::copy_n(coeffs->data.begin() + static_cast<std::ptrdiff_t>(row * br * bc), br * bc, blk.data.begin());
            grid[k][l] = blk;
            res.blocks.emplace(std::make_pair(k, l), std::move(blk));
        }
    }
    res.product = assemble(grid);
    return res;
}

RunResult run_protocol(const DegreeTable& table, const Dims& dims, std::uint64_t base_q, std::uint64_t seed)
{
    auto choice = choose_field_and_points(table, base_q, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Matrix A = random_matrix(choice.field, dims.a, dims.b, rng);
    Matrix B = random_matrix(choice.field, dims.b, dims.c, rng);
    const Matrix expected = multiply(choice.field, A, B);

    RunResult out;
    out.instance = make_instance(choice.field, table, std::move(A), std::move(B), choice.points, rng());
    out.instance.responses = server_compute(out.instance.field, out.instance.shares);
    out.decoded = decode(out.instance);
    out.matches = out.decoded.product == expected;
    out.security = std::move(choice.security);
    return out;
}

}  // namespace degtab
