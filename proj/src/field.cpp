#include "degtab/field.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace degtab {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses are deterministic for all 64-bit n.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n)
{
    if (n <= 2) return 2;
    while (!is_prime(n)) ++n;
    return n;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q)
{
    if (!is_prime(q)) throw std::invalid_argument("field modulus " + std::to_string(q) + " is not prime");
    if (q >> 63) throw std::invalid_argument("field modulus must be below 2^63");
}

PrimeField::Element PrimeField::reduce(std::int64_t x) const
{
    const auto q = static_cast<std::int64_t>(q_);
    auto r = x % q;
    if (r < 0) r += q;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::add(Element a, Element b) const
{
    const auto s = a + b;
    return s >= q_ ? s - q_ : s;
}

PrimeField::Element PrimeField::sub(Element a, Element b) const { return a >= b ? a - b : a + q_ - b; }

PrimeField::Element PrimeField::neg(Element a) const { return a == 0 ? 0 : q_ - a; }

PrimeField::Element PrimeField::mul(Element a, Element b) const { return mul_mod(a, b, q_); }

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const { return pow_mod(a, e, q_); }

PrimeField::Element PrimeField::inv(Element a) const
{
    if (a % q_ == 0) throw std::domain_error("zero has no inverse");
    return pow_mod(a, q_ - 2, q_);
}

PrimeField::Element PrimeField::random(std::mt19937_64& rng) const
{
    return std::uniform_int_distribution<std::uint64_t>(0, q_ - 1)(rng);
}

bool Matrix::is_zero() const
{
    for (auto x : data)
        if (x) return false;
    return true;
}

Matrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    Matrix m(rows, cols);
    for (auto& x : m.data) x = f.random(rng);
    return m;
}

Matrix multiply(const PrimeField& f, const Matrix& a, const Matrix& b)
{
    if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const auto x = a(i, k);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
        }
    }
    return out;
}

Matrix add(const PrimeField& f, const Matrix& a, const Matrix& b)
{
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("matrix shapes do not match");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] = f.add(a.data[i], b.data[i]);
    return out;
}

Matrix scale(const PrimeField& f, const Matrix& a, std::uint64_t s)
{
    Matrix out = a;
    for (auto& x : out.data) x = f.mul(x, s);
    return out;
}

std::optional<Matrix> solve(const PrimeField& f, Matrix a, Matrix b)
{
    if (a.rows != a.cols || b.rows != a.rows) throw std::invalid_argument("solve needs square A and matching B");
    const std::size_t n = a.rows;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            for (std::size_t j = 0; j < b.cols; ++j) std::swap(b(col, j), b(pivot, j));
        }
        const auto inv = f.inv(a(col, col));
        for (std::size_t j = 0; j < n; ++j) a(col, j) = f.mul(a(col, j), inv);
        for (std::size_t j = 0; j < b.cols; ++j) b(col, j) = f.mul(b(col, j), inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const auto factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(col, j)));
            for (std::size_t j = 0; j < b.cols; ++j) b(i, j) = f.sub(b(i, j), f.mul(factor, b(col, j)));
        }
    }
    return b;
}

bool is_invertible(const PrimeField& f, Matrix a)
{
    if (a.rows != a.cols) return false;
    const auto n = a.rows;
    return solve(f, std::move(a), Matrix(n, 0)).has_value();
}

}  // namespace degtab
