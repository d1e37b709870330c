#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace degtab {

enum class VarKind { Binary, Integer };

struct Variable {
    std::string name;
    VarKind kind = VarKind::Binary;
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;  // none: unbounded above

    friend bool operator==(const Variable&, const Variable&) = default;
};

struct Term {
    std::size_t var = 0;
    std::int64_t coef = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Sense sense = Sense::LessEqual;
    std::int64_t rhs = 0;

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Objective {
    bool minimize = true;
    std::vector<Term> terms;

    friend bool operator==(const Objective&, const Objective&) = default;
};

class IlpModel {
public:
    /// Throws std::invalid_argument on a duplicate or malformed name.
    std::size_t add_variable(std::string name, VarKind kind, std::int64_t lower = 0,
                             std::optional<std::int64_t> upper = std::nullopt);
    std::size_t add_binary(std::string name) { return add_variable(std::move(name), VarKind::Binary, 0, 1); }
    void add_constraint(std::string name, std::vector<Term> terms, Sense sense, std::int64_t rhs);

    /// Index of a variable, or nothing.
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t at(const std::string& name) const;

    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    Objective objective;

    friend bool operator==(const IlpModel&, const IlpModel&) = default;

private:
    std::vector<Variable> variables_;
    std::vector<Constraint> constraints_;
    std::map<std::string, std::size_t> index_;
};

/// The general model over entries 0..2*entry_bound, with the sorting and
/// zero-minimum symmetry cuts.
IlpModel build_blp(int K, int L, int T, std::int64_t entry_bound);

/// The model for fixed alpha_p, beta_p and beta_s. Parameters with K < L are
/// swapped first. With `tight_link` every U_{s+beta_c} >= S_{r,s} is a
/// separate constraint instead of one aggregated inequality per (r, s).
IlpModel build_ilp_fixed(int K, int L, int T, bool tight_link = false);

/// Closed-form sizes quoted for the fixed-prefix model.
struct IlpCountFormulas {
    std::int64_t variables = 0;   // T^2 KL + T^3 + T^2 + TK + 2T + K
    std::int64_t constraints = 0; // T^2 KL + T^3 - TKL - TK + 5T + K - 3
};

IlpCountFormulas ilp_fixed_count_formulas(int K, int L, int T);

/// CPLEX LP text. Constraints keep model order; Bounds, Binary and General
/// list variables sorted by name.
std::string emit_lp_text(const IlpModel& model);

/// Reads the subset of the LP format written by emit_lp_text(). Throws
/// std::invalid_argument on syntax errors.
IlpModel parse_lp_text(const std::string& text);

/// Same variables (by name, kind and bounds), constraints and objective,
/// regardless of variable declaration order.
bool same_model(const IlpModel& a, const IlpModel& b);

enum class SolveStatus { Optimal, Infeasible, BudgetExceeded };

struct SolveResult {
    SolveStatus status = SolveStatus::BudgetExceeded;
    std::int64_t objective = 0;
    std::vector<std::int64_t> values;
    std::uint64_t nodes = 0;
};

/// Depth-first branch and bound with bound propagation. Only for tiny models.
SolveResult naive_solve(const IlpModel& model, std::uint64_t budget = 5'000'000);

std::string to_string(SolveStatus s);

}  // namespace degtab
