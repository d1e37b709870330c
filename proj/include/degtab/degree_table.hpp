#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace degtab {

using Exponent = std::int64_t;

/// Ordered list of polynomial exponents. Order matters: it fixes which
/// matrix block (or mask) each exponent belongs to.
using ExponentVector = std::vector<Exponent>;

/// The four exponent blocks of a polynomial code for outer-product SDMM.
///
/// Row exponents are `alpha_p | alpha_s` (data blocks of A, then masks),
/// column exponents are `beta_p | beta_s`. The table itself is the matrix
/// of pairwise sums. Vectors are kept in the order given; nothing here
/// sorts them.
struct DegreeTable {
    int K = 0;
    int L = 0;
    int T = 0;
    ExponentVector alpha_p;
    ExponentVector alpha_s;
    ExponentVector beta_p;
    ExponentVector beta_s;

    ExponentVector alpha() const;
    ExponentVector beta() const;

    /// Concatenation alpha_p | alpha_s | beta_p | beta_s.
    ExponentVector flattened() const;

    /// Largest entry of the degree table, i.e. max(alpha) + max(beta).
    Exponent max_entry() const;

    friend bool operator==(const DegreeTable&, const DegreeTable&) = default;
};

enum class Condition { D1, D2, D3 };

std::string to_string(Condition c);

struct Violation {
    Condition condition;
    std::vector<Exponent> witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
};

/// Thrown when the vectors do not have the lengths declared by K, L, T, or
/// contain negative entries. Distinct from a table that is well-formed but
/// violates D1-D3.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by operations that require a valid table.
class InvalidTableError : public std::domain_error {
public:
    explicit InvalidTableError(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Left and right scores of every lower-half row and their total.
struct ScoreBreakdown {
    std::vector<std::int64_t> left;
    std::vector<std::int64_t> right;
    std::int64_t total = 0;

    friend bool operator==(const ScoreBreakdown&, const ScoreBreakdown&) = default;
};

void check_structure(const DegreeTable& table);

/// Checks D1 (alpha distinct), D2 (beta distinct) and D3 (every sum of a
/// data exponent pair occurs exactly once over all pairs of the table).
/// Throws StructuralError on malformed input.
ValidationReport validate(const DegreeTable& table);

/// Throws InvalidTableError unless validate() passes.
void require_valid(const DegreeTable& table);

/// Sorted, duplicate-free sumset {x + y}. Throws on empty input.
std::vector<Exponent> sumset(std::span<const Exponent> a, std::span<const Exponent> b);

/// Number of distinct entries N of the degree table, by explicit sumset
/// enumeration.
std::int64_t count_distinct(const DegreeTable& table);

/// Scores by direct inspection: row K+i contributes the entries of its left
/// (beta_p) and right (beta_s) parts that already occur in rows 1..K+i-1.
ScoreBreakdown score_bruteforce(const DegreeTable& table);

/// |(alpha_i + Set(beta_p)) ∩ (Set(alpha_p) + beta_j)| for row index i and
/// column index j of the concatenated vectors.
std::int64_t row_col_intersection(const DegreeTable& table, std::size_t i, std::size_t j);

}  // namespace degtab
