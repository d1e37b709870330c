#include "degtab/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace degtab {

namespace {

struct Extent {
    Exponent min;
    Exponent max;
};

Extent extent(const ExponentVector& v) { return {*std::min_element(v.begin(), v.end()), *std::max_element(v.begin(), v.end())}; }

ExponentVector sorted(ExponentVector v)
{
    std::sort(v.begin(), v.end());
    return v;
}

ExponentVector permuted(const ExponentVector& v, const std::vector<std::size_t>& perm)
{
    if (perm.empty()) return v;
    if (perm.size() != v.size()) throw std::invalid_argument("permutation has wrong length");
    std::vector<bool> used(v.size(), false);
    ExponentVector out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (perm[j] >= v.size() || used[perm[j]]) throw std::invalid_argument("not a permutation");
        used[perm[j]] = true;
        out[j] = v[perm[j]];
    }
    return out;
}

Exponent to_entry(const Rational& q)
{
    if (q.denominator() != 1) throw std::domain_error("transform yields non-integer entry " + to_string(q));
    if (q.numerator() < 0) throw std::domain_error("transform yields negative entry " + to_string(q));
    return q.numerator();
}

}  // namespace

std::vector<std::size_t> feasible_squeezes(const DegreeTable& t, SqueezeKind kind)
{
    const auto own = sorted(kind == SqueezeKind::Alpha ? t.alpha() : t.beta());
    const auto other = extent(kind == SqueezeKind::Alpha ? t.beta() : t.alpha());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < own.size(); ++i) {
        if (own[i] + other.max < (own[i + 1] - 1) + other.min) out.push_back(i);
    }
    return out;
}

DegreeTable apply_squeeze(const DegreeTable& t, SqueezeKind kind, std::size_t index, std::vector<std::size_t>* affected)
{
    const auto own = sorted(kind == SqueezeKind::Alpha ? t.alpha() : t.beta());
    const Exponent pivot = own.at(index);
    DegreeTable out = t;
    std::size_t pos = 0;
    auto lower = [&](ExponentVector& block) {
        for (auto& e : block) {
            if (e > pivot) {
                --e;
                if (affected) affected->push_back(pos);
            }
            ++pos;
        }
    };
    if (kind == SqueezeKind::Alpha) {
        lower(out.alpha_p);
        lower(out.alpha_s);
    } else {
        lower(out.beta_p);
        lower(out.beta_s);
    }
    return out;
}

std::optional<std::pair<DegreeTable, SqueezeStep>> squeeze_step(const DegreeTable& t)
{
    require_valid(t);
    const auto a = feasible_squeezes(t, SqueezeKind::Alpha);
    const auto b = feasible_squeezes(t, SqueezeKind::Beta);
    if (!a.empty() && !b.empty()) {
        throw std::logic_error("both squeeze kinds feasible on a valid table");
    }
    if (a.empty() && b.empty()) return std::nullopt;

    const SqueezeKind kind = a.empty() ? SqueezeKind::Beta : SqueezeKind::Alpha;
    SqueezeStep step{kind, a.empty() ? b.front() : a.front(), {}};
    auto next = apply_squeeze(t, kind, step.index, &step.affected);
    return std::make_pair(std::move(next), std::move(step));
}

SqueezeResult squeeze(const DegreeTable& t)
{
    SqueezeResult res{t, {}};
    while (auto s = squeeze_step(res.table)) {
        res.table = std::move(s->first);
        res.steps.push_back(std::move(s->second));
    }
    return res;
}

bool satisfies_gap_bounds(const DegreeTable& t)
{
    const auto a = sorted(t.alpha());
    const auto b = sorted(t.beta());
    const Exponent span_a = a.back() - a.front();
    const Exponent span_b = b.back() - b.front();
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        if (a[i + 1] - 1 + b.front() > a[i] + b.back()) return false;
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (b[i + 1] - 1 + a.front() > b[i] + a.back()) return false;
    }
    const Exponent rows = t.K + t.T - 1;
    return span_a <= rows * (span_b + 1) && span_b <= rows * (span_a + 1);
}

DegreeTable apply_transform(const DegreeTable& t, const EquivalenceTransform& tr)
{
    check_structure(t);
    if (tr.scale.numerator() == 0) throw std::domain_error("transform scale must be non-zero");
    auto map_block = [&](const ExponentVector& v, const std::vector<std::size_t>& perm, const Rational& shift) {
        ExponentVector out;
        for (Exponent e : permuted(v, perm)) out.push_back(to_entry(tr.scale * (Rational(e) + shift)));
        return out;
    };
    DegreeTable out = t;
    out.alpha_p = map_block(t.alpha_p, tr.perm_alpha_p, tr.shift_alpha);
    out.alpha_s = map_block(t.alpha_s, tr.perm_alpha_s, tr.shift_alpha);
    out.beta_p = map_block(t.beta_p, tr.perm_beta_p, tr.shift_beta);
    out.beta_s = map_block(t.beta_s, tr.perm_beta_s, tr.shift_beta);
    require_valid(out);
    return out;
}

DegreeTable normal(const DegreeTable& t)
{
    check_structure(t);
    DegreeTable out = t;
    for (auto* block : {&out.alpha_p, &out.alpha_s, &out.beta_p, &out.beta_s}) std::sort(block->begin(), block->end());

    const Exponent amin = std::min(out.alpha_p.front(), out.alpha_s.front());
    const Exponent bmin = std::min(out.beta_p.front(), out.beta_s.front());
    for (auto& e : out.alpha_p) e -= amin;
    for (auto& e : out.alpha_s) e -= amin;
    for (auto& e : out.beta_p) e -= bmin;
    for (auto& e : out.beta_s) e -= bmin;

    Exponent g = 0;
    for (Exponent e : out.flattened()) g = std::gcd(g, e);
    if (g > 1) {
        for (auto* block : {&out.alpha_p, &out.alpha_s, &out.beta_p, &out.beta_s}) {
            for (auto& e : *block) e /= g;
        }
    }
    return out;
}

bool is_normal(const DegreeTable& t) { return normal(t) == t; }

DegreeTable negate(const DegreeTable& t)
{
    check_structure(t);
    const auto all = t.flattened();
    const Exponent m = *std::max_element(all.begin(), all.end());
    DegreeTable out = t;
    for (auto* block : {&out.alpha_p, &out.alpha_s, &out.beta_p, &out.beta_s}) {
        for (auto& e : *block) e = m - e;
    }
    return out;
}

DegreeTable canonical(const DegreeTable& t)
{
    auto first = normal(t);
    auto second = normal(negate(first));
    return second.flattened() < first.flattened() ? second : first;
}

DegreeTable transpose(const DegreeTable& t)
{
    check_structure(t);
    if (t.K != t.L) throw std::invalid_argument("transpose requires K = L");
    DegreeTable out = t;
    std::swap(out.alpha_p, out.beta_p);
    std::swap(out.alpha_s, out.beta_s);
    return out;
}

}  // namespace degtab
