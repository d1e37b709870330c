#include "degtab/degree_table.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace degtab {

namespace {

ExponentVector concat(const ExponentVector& a, const ExponentVector& b)
{
    ExponentVector out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<Exponent> duplicates(const ExponentVector& v)
{
    std::vector<Exponent> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Exponent> dups;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] == sorted[i - 1] && (dups.empty() || dups.back() != sorted[i])) {
            dups.push_back(sorted[i]);
        }
    }
    return dups;
}

std::string describe_lengths(const DegreeTable& t)
{
    return "K=" + std::to_string(t.K) + " L=" + std::to_string(t.L) + " T=" + std::to_string(t.T) +
           " but |alpha_p|=" + std::to_string(t.alpha_p.size()) +
           " |alpha_s|=" + std::to_string(t.alpha_s.size()) +
           " |beta_p|=" + std::to_string(t.beta_p.size()) +
           " |beta_s|=" + std::to_string(t.beta_s.size());
}

std::string describe_report(const ValidationReport& report)
{
    std::string msg = "invalid degree table:";
    for (const auto& v : report.violations) {
        msg += " " + to_string(v.condition);
        if (!v.witness.empty()) msg += "(" + std::to_string(v.witness.front()) + ")";
    }
    return msg;
}

}  // namespace

ExponentVector DegreeTable::alpha() const { return concat(alpha_p, alpha_s); }

ExponentVector DegreeTable::beta() const { return concat(beta_p, beta_s); }

ExponentVector DegreeTable::flattened() const { return concat(alpha(), beta()); }

Exponent DegreeTable::max_entry() const
{
    const auto a = alpha();
    const auto b = beta();
    return *std::max_element(a.begin(), a.end()) + *std::max_element(b.begin(), b.end());
}

std::string to_string(Condition c)
{
    switch (c) {
    case Condition::D1: return "D1";
    case Condition::D2: return "D2";
    case Condition::D3: return "D3";
    }
    return "?";
}

InvalidTableError::InvalidTableError(ValidationReport report)
    : std::domain_error(describe_report(report)), report_(std::move(report))
{
}

void check_structure(const DegreeTable& t)
{
    if (t.K < 1 || t.L < 1 || t.T < 1) {
        throw StructuralError("K, L and T must be positive");
    }
    if (t.alpha_p.size() != static_cast<std::size_t>(t.K) ||
        t.alpha_s.size() != static_cast<std::size_t>(t.T) ||
        t.beta_p.size() != static_cast<std::size_t>(t.L) ||
        t.beta_s.size() != static_cast<std::size_t>(t.T)) {
        throw StructuralError("length mismatch: " + describe_lengths(t));
    }
    for (Exponent e : t.flattened()) {
        if (e < 0) throw StructuralError("negative exponent " + std::to_string(e));
    }
}

ValidationReport validate(const DegreeTable& t)
{
    check_structure(t);
    ValidationReport report;

    const auto a = t.alpha();
    const auto b = t.beta();
    if (auto d = duplicates(a); !d.empty()) report.violations.push_back({Condition::D1, d});
    if (auto d = duplicates(b); !d.empty()) report.violations.push_back({Condition::D2, d});

    std::unordered_map<Exponent, int> multiplicity;
    multiplicity.reserve(a.size() * b.size());
    for (Exponent x : a) {
        for (Exponent y : b) ++multiplicity[x + y];
    }
    std::vector<Exponent> bad;
    for (Exponent n : sumset(t.alpha_p, t.beta_p)) {
        if (multiplicity[n] != 1) bad.push_back(n);
    }
    if (!bad.empty()) report.violations.push_back({Condition::D3, bad});
    return report;
}

void require_valid(const DegreeTable& table)
{
    auto report = validate(table);
    if (!report.valid()) throw InvalidTableError(std::move(report));
}

std::vector<Exponent> sumset(std::span<const Exponent> a, std::span<const Exponent> b)
{
    if (a.empty() || b.empty()) throw std::invalid_argument("sumset of an empty set");
    std::vector<Exponent> out;
    out.reserve(a.size() * b.size());
    for (Exponent x : a) {
        for (Exponent y : b) out.push_back(x + y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int64_t count_distinct(const DegreeTable& table)
{
    require_valid(table);
    return static_cast<std::int64_t>(sumset(table.alpha(), table.beta()).size());
}

ScoreBreakdown score_bruteforce(const DegreeTable& t)
{
    require_valid(t);
    const auto a = t.alpha();
    const auto b = t.beta();

    std::unordered_set<Exponent> seen;
    for (int row = 0; row < t.K; ++row) {
        for (Exponent y : b) seen.insert(a[row] + y);
    }

    // Sets, not multisets: a value repeated inside one row counts once.
    auto count_seen = [&](Exponent x, const ExponentVector& cols) {
        std::unordered_set<Exponent> hit;
        for (Exponent y : cols) {
            if (seen.count(x + y)) hit.insert(x + y);
        }
        return static_cast<std::int64_t>(hit.size());
    };

    ScoreBreakdown s;
    for (int i = 0; i < t.T; ++i) {
        const Exponent x = t.alpha_s[i];
        s.left.push_back(count_seen(x, t.beta_p));
        s.right.push_back(count_seen(x, t.beta_s));
        s.total += s.left.back() + s.right.back();
        for (Exponent y : b) seen.insert(x + y);
    }
    return s;
}

std::int64_t row_col_intersection(const DegreeTable& t, std::size_t i, std::size_t j)
{
    const auto a = t.alpha();
    const auto b = t.beta();
    if (i >= a.size() || j >= b.size()) throw std::out_of_range("row/column index");
    std::unordered_set<Exponent> row;
    for (Exponent y : t.beta_p) row.insert(a[i] + y);
    std::unordered_set<Exponent> both;
    for (Exponent x : t.alpha_p) {
        if (row.count(x + b[j])) both.insert(x + b[j]);
    }
    return static_cast<std::int64_t>(both.size());
}

}  // namespace degtab
