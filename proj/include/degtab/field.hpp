#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace degtab {

bool is_prime(std::uint64_t n);

/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);

/// Arithmetic modulo a prime q < 2^63.
class PrimeField {
public:
    using Element = std::uint64_t;

    /// Throws std::invalid_argument unless q is prime.
    explicit PrimeField(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }

    Element reduce(std::int64_t x) const;
    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element pow(Element a, std::uint64_t e) const;
    /// Throws std::domain_error for 0.
    Element inv(Element a) const;

    Element random(std::mt19937_64& rng) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t q_;
};

/// Dense row-major matrix of field elements.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint64_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    std::uint64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b);
Matrix scale(const PrimeField& f, const Matrix& a, std::uint64_t s);

/// Solves A X = B for square A by Gauss-Jordan elimination. Returns nothing
/// if A is singular.
std::optional<Matrix> solve(const PrimeField& f, Matrix a, Matrix b);

bool is_invertible(const PrimeField& f, Matrix a);

}  // namespace degtab
