#pragma once

#include "degtab/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace degtab {

struct PlotSeries {
    std::string name;
    std::vector<std::pair<std::int64_t, Rational>> rows;  // sorted by x, unique x
};

/// K = L = 4 and T = 1..10: N(r) of GASP_r for r = 1..4 (points with r > T
/// omitted) and the lower bound 2T + 19.
std::vector<PlotSeries> figure1a();

/// K = L = T = n^2 for n = 2..n_max: N of GASP_1, GASP_n and GASP_{n^2}, each
/// divided by n^4 + 3n^2.
std::vector<PlotSeries> figure1b(int n_max);

/// Tab-separated with a header line; one column per series, empty cells for
/// missing points.
std::string to_tsv(const std::vector<PlotSeries>& series, const std::string& x_name);

}  // namespace degtab
