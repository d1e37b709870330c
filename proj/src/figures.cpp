#include "degtab/figures.hpp"

#include "degtab/bounds.hpp"
#include "degtab/gasp.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace degtab {

std::vector<PlotSeries> figure1a()
{
    constexpr int K = 4, L = 4;
    std::vector<PlotSeries> out;
    for (int r = 1; r <= 4; ++r) {
        PlotSeries s{"GASP_" + std::to_string(r), {}};
        for (int T = r; T <= 10; ++T) s.rows.emplace_back(T, Rational(n_of_r({K, L, T, r})));
        out.push_back(std::move(s));
    }
    PlotSeries lb{"lower_bound", {}};
    for (int T = 1; T <= 10; ++T) lb.rows.emplace_back(T, Rational(lower_bounds(K, L, T).ineq1));
    out.push_back(std::move(lb));
    return out;
}

std::vector<PlotSeries> figure1b(int n_max)
{
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    PlotSeries one{"GASP_1", {}}, mid{"GASP_n", {}}, big{"GASP_big", {}};
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const auto n2 = static_cast<int>(n * n);
        const Rational bound(n * n * n * n + 3 * n * n);
        one.rows.emplace_back(n, Rational(n_of_r({n2, n2, n2, 1})) / bound);
        mid.rows.emplace_back(n, Rational(n_of_r({n2, n2, n2, static_cast<int>(n)})) / bound);
        big.rows.emplace_back(n, Rational(n_of_r({n2, n2, n2, n2})) / bound);
    }
    return {one, mid, big};
}

std::string to_tsv(const std::vector<PlotSeries>& series, const std::string& x_name)
{
    std::set<std::int64_t> xs;
    std::vector<std::map<std::int64_t, Rational>> cols;
    for (const auto& s : series) {
        cols.emplace_back(s.rows.begin(), s.rows.end());
        for (const auto& [x, y] : s.rows) xs.insert(x);
    }
    std::string out = x_name;
    for (const auto& s : series) out += "\t" + s.name;
    out += "\n";
    for (auto x : xs) {
        out += std::to_string(x);
        for (const auto& c : cols) {
            out += "\t";
            if (auto it = c.find(x); it != c.end()) out += to_string(it->second);
        }
        out += "\n";
    }
    return out;
}

}  // namespace degtab
