#pragma once

// Independent reference computations used by the unit tests.

#include "degtab/degree_table.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t distinct_entries(const degtab::DegreeTable& t)
{
    std::set<std::int64_t> s;
    for (auto a : t.alpha())
        for (auto b : t.beta()) s.insert(a + b);
    return static_cast<std::int64_t>(s.size());
}

// Scores by scanning the full table row by row.
inline std::int64_t score(const degtab::DegreeTable& t)
{
    const auto a = t.alpha();
    std::set<std::int64_t> seen;
    std::int64_t s = 0;
    for (std::size_t row = 0; row < a.size(); ++row) {
        std::vector<std::int64_t> entries;
        for (auto b : t.beta_p) entries.push_back(a[row] + b);
        for (auto b : t.beta_s) entries.push_back(a[row] + b);
        if (row >= static_cast<std::size_t>(t.K)) {
            for (auto e : entries) s += seen.count(e);
        }
        seen.insert(entries.begin(), entries.end());
    }
    return s;
}

// GASP_r alpha_s straight from the definition: walk KL, KL+1, ... and keep
// values whose offset from KL is below r modulo K.
inline std::vector<std::int64_t> gasp_alpha_s(int K, int L, int T, int r)
{
    std::vector<std::int64_t> out;
    for (std::int64_t v = static_cast<std::int64_t>(K) * L; static_cast<int>(out.size()) < T; ++v) {
        if ((v - static_cast<std::int64_t>(K) * L) % K < r) out.push_back(v);
    }
    return out;
}

inline std::uint64_t next_prime(std::uint64_t n)
{
    auto prime = [](std::uint64_t x) {
        if (x < 2) return false;
        for (std::uint64_t d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    while (!prime(n)) ++n;
    return n;
}

}  // namespace oracle
