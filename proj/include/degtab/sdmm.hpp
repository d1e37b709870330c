#pragma once

#include "degtab/degree_table.hpp"
#include "degtab/field.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace degtab {

/// A is a x b, B is b x c.
struct Dims {
    std::size_t a = 1;
    std::size_t b = 1;
    std::size_t c = 1;
};

struct Partition {
    std::vector<Matrix> A;  // K row blocks
    std::vector<Matrix> B;  // L column blocks
};

/// Throws std::invalid_argument unless K | rows(A), L | cols(B) and the
/// inner dimensions agree.
Partition partition(const Matrix& A, const Matrix& B, int K, int L);

/// Inverse of the row/column block split: the (k, l) block of AB.
Matrix assemble(const std::vector<std::vector<Matrix>>& blocks);

struct SecurityReport {
    std::uint64_t subsets_checked = 0;
    bool exhaustive = false;
    /// Failing T-subsets of server indices (at most the first 64).
    std::vector<std::vector<std::size_t>> failures;
    std::uint64_t failure_count = 0;

    bool passed() const { return failure_count == 0; }
};

struct SecurityOptions {
    std::uint64_t exhaustive_limit = 100'000;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 0;
};

/// For each checked T-subset of servers, tests that the T x T matrices
/// [a_n^alpha_s[t]] and [a_n^beta_s[t]] are invertible. All C(N, T) subsets
/// are checked when there are at most `exhaustive_limit`, otherwise
/// `samples` random subsets.
SecurityReport security_check(const PrimeField& field, const DegreeTable& table,
                              const std::vector<std::uint64_t>& points, const SecurityOptions& options = {});

/// The sorted distinct degrees of h(x) = f(x) g(x).
std::vector<Exponent> product_degrees(const DegreeTable& table);

/// Whether the interpolation matrix [a_n^d] over the product degrees is invertible.
bool decodable_points(const PrimeField& field, const DegreeTable& table, const std::vector<std::uint64_t>& points);

struct FieldChoice {
    PrimeField field{2};
    std::vector<std::uint64_t> points;
    int attempts = 0;
    SecurityReport security;
};

/// q is the smallest prime >= max(base_q, M + 2, N + 1), M the largest table
/// entry. Points are N distinct non-zero elements drawn from a seeded PRNG and
/// kept only if decoding and the security check succeed. Throws
/// std::runtime_error after `max_attempts` rejections.
FieldChoice choose_field_and_points(const DegreeTable& table, std::uint64_t base_q, std::uint64_t seed,
                                    int max_attempts = 64);

struct Share {
    Matrix f;  // (a/K) x b
    Matrix g;  // b x (c/L)
};

struct SdmmInstance {
    PrimeField field{2};
    Dims dims;
    DegreeTable table;
    Matrix A;
    Matrix B;
    std::vector<Matrix> R;  // masks for A, (a/K) x b
    std::vector<Matrix> S;  // masks for B, b x (c/L)
    std::vector<std::uint64_t> points;
    std::vector<Share> shares;
    std::vector<Matrix> responses;
};

struct InstanceOptions {
    bool zero_masks = false;  // test hook
};

/// Samples the masks from `seed` and encodes the shares. Responses are left
/// empty until server_compute().
SdmmInstance make_instance(const PrimeField& field, const DegreeTable& table, Matrix A, Matrix B,
                           std::vector<std::uint64_t> points, std::uint64_t seed, const InstanceOptions& options = {});

/// f(a_n) and g(a_n) for every point.
std::vector<Share> encode(const PrimeField& field, const DegreeTable& table, const Partition& data,
                          const std::vector<Matrix>& R, const std::vector<Matrix>& S,
                          const std::vector<std::uint64_t>& points);

std::vector<Matrix> server_compute(const PrimeField& field, const std::vector<Share>& shares);

struct DecodeResult {
    Matrix product;
    std::map<std::pair<int, int>, Matrix> blocks;  // (k, l) -> A_k B_l
};

/// Interpolates h from the responses and reads off the data coefficients.
/// Throws std::runtime_error if the interpolation matrix is singular.
DecodeResult decode(const SdmmInstance& instance);

struct RunResult {
    SdmmInstance instance;
    DecodeResult decoded;
    bool matches = false;
    SecurityReport security;
};

/// End-to-end run on random data of the given size.
RunResult run_protocol(const DegreeTable& table, const Dims& dims, std::uint64_t base_q, std::uint64_t seed);

}  // namespace degtab
