#pragma once

#include "degtab/degree_table.hpp"
#include "degtab/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace degtab {

enum class SqueezeKind { Alpha, Beta };

/// One gap-closing decrement. `index` is the 0-based position in the sorted
/// vector after which every entry is lowered by one; `affected` lists the
/// positions in the concatenated (unsorted) vector that were decremented.
struct SqueezeStep {
    SqueezeKind kind;
    std::size_t index;
    std::vector<std::size_t> affected;

    friend bool operator==(const SqueezeStep&, const SqueezeStep&) = default;
};

/// Sorted positions i at which an alpha (resp. beta) squeeze is feasible.
std::vector<std::size_t> feasible_squeezes(const DegreeTable& table, SqueezeKind kind);

/// Applies one squeeze of the given kind at a sorted position, without
/// checking feasibility.
DegreeTable apply_squeeze(const DegreeTable& table, SqueezeKind kind, std::size_t index,
                          std::vector<std::size_t>* affected = nullptr);

/// Performs one squeeze at the smallest feasible index, or returns nothing
/// if the table is squeezed.
std::optional<std::pair<DegreeTable, SqueezeStep>> squeeze_step(const DegreeTable& table);

struct SqueezeResult {
    DegreeTable table;
    std::vector<SqueezeStep> steps;
};

SqueezeResult squeeze(const DegreeTable& table);

/// Checks the consecutive-gap bounds every squeezed table satisfies.
bool satisfies_gap_bounds(const DegreeTable& table);

/// table' = scale * (perm(table) + shift), with one shift for alpha and one
/// for beta. permutations[b][j] is the source index for position j of block
/// b (blocks ordered alpha_p, alpha_s, beta_p, beta_s); empty means identity.
struct EquivalenceTransform {
    Rational scale{1};
    Rational shift_alpha{0};
    Rational shift_beta{0};
    std::vector<std::size_t> perm_alpha_p;
    std::vector<std::size_t> perm_alpha_s;
    std::vector<std::size_t> perm_beta_p;
    std::vector<std::size_t> perm_beta_s;
};

/// Throws std::domain_error if an entry is not a non-negative integer
/// afterwards, or if the scale is zero.
DegreeTable apply_transform(const DegreeTable& table, const EquivalenceTransform& t);

/// Blocks sorted, min(alpha) = min(beta) = 0 and gcd of all entries 1.
DegreeTable normal(const DegreeTable& table);

bool is_normal(const DegreeTable& table);

/// x -> M - x for every entry, M the largest entry of alpha | beta.
DegreeTable negate(const DegreeTable& table);

/// The lexicographically smaller of normal(t) and normal(negate(normal(t))),
/// compared on alpha_p | alpha_s | beta_p | beta_s.
DegreeTable canonical(const DegreeTable& table);

/// Swaps the roles of alpha and beta. Only defined for K = L.
DegreeTable transpose(const DegreeTable& table);

}  // namespace degtab
