#include "degtab/ilp.hpp"
#include "degtab/search.hpp"

#include <doctest.h>

#include <sstream>

using namespace degtab;

namespace {

int declared_integer_vars(const std::string& lp)
{
    std::istringstream in(lp);
    std::string line;
    bool listing = false;
    int n = 0;
    while (std::getline(in, line)) {
        if (line == "Binary" || line == "General") {
            listing = true;
            continue;
        }
        if (line == "End" || line == "Bounds" || line == "Subject To") listing = false;
        if (!listing) continue;
        std::istringstream words(line);
        std::string w;
        while (words >> w) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("fixed-prefix model sizes")
{
    const auto m = build_ilp_fixed(2, 2, 2);
    CHECK(m.variables().size() == 38);
    CHECK(ilp_fixed_count_formulas(2, 2, 2).variables == 38);
    CHECK(ilp_fixed_count_formulas(2, 2, 2).constraints == 21);
    const auto f9 = ilp_fixed_count_formulas(9, 9, 9);
    CHECK(static_cast<std::int64_t>(build_ilp_fixed(9, 9, 9).variables().size()) == f9.variables);
    CHECK(declared_integer_vars(emit_lp_text(m)) == 38);
}

TEST_CASE("LP text round trip")
{
    for (const auto& m : {build_ilp_fixed(2, 2, 2), build_ilp_fixed(3, 2, 2, true), build_blp(1, 1, 2, 2)}) {
        const auto text = emit_lp_text(m);
        const auto back = parse_lp_text(text);
        CHECK(same_model(m, back));
        CHECK(emit_lp_text(back) == text);
    }
}

TEST_CASE("minimal document")
{
    IlpModel m;
    m.add_binary("x");
    const auto text = emit_lp_text(m);
    CHECK(text.find("Binary") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
    CHECK(same_model(parse_lp_text(text), m));
}

TEST_CASE("name collisions and bad names")
{
    IlpModel m;
    m.add_binary("x");
    CHECK_THROWS(m.add_binary("x"));
    CHECK_THROWS(m.add_binary("bad name"));
    CHECK_THROWS(m.add_binary(""));
    CHECK_THROWS(parse_lp_text("nonsense"));
}

TEST_CASE("naive solver")
{
    const auto r = naive_solve(build_ilp_fixed(1, 1, 1));
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.objective == 3);

    const auto s = naive_solve(build_ilp_fixed(1, 1, 2));
    CHECK(s.status == SolveStatus::Optimal);
    CHECK(s.objective == exhaustive_fixed_prefix(1, 1, 2).best_N);

    const auto b = naive_solve(build_blp(1, 1, 1, 2));
    CHECK(b.status == SolveStatus::Optimal);
    CHECK(b.objective == 3);
}

TEST_CASE("infeasible toy model")
{
    IlpModel m;
    const auto x = m.add_binary("x");
    m.add_constraint("lo", {{x, 1}}, Sense::GreaterEqual, 1);
    m.add_constraint("hi", {{x, 1}}, Sense::LessEqual, 0);
    CHECK(naive_solve(m).status == SolveStatus::Infeasible);
}

TEST_CASE("budget exhaustion")
{
    const auto r = naive_solve(build_ilp_fixed(2, 2, 2), 3);
    CHECK(r.status == SolveStatus::BudgetExceeded);
}
