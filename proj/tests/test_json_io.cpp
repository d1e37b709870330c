#include "degtab/gasp.hpp"
#include "degtab/json_io.hpp"

#include <doctest.h>

using namespace degtab;

TEST_CASE("table round trip")
{
    for (int r = 1; r <= 4; ++r) {
        const auto t = construct({4, 4, 4, r});
        CHECK(table_from_json(to_json(t)) == t);
        CHECK(table_from_json(Json::parse(to_json(t).dump())) == t);
    }
}

TEST_CASE("malformed tables")
{
    CHECK_THROWS_AS(table_from_json(Json::parse(R"({"K":1})")), StructuralError);
    CHECK_THROWS_AS(table_from_json(Json::parse(R"([1,2])")), StructuralError);
    CHECK_THROWS_AS(table_from_json(Json::parse(R"({"K":1,"L":1,"T":1,"alpha_p":["x"],"alpha_s":[1],"beta_p":[0],"beta_s":[1]})")),
                    StructuralError);
}

TEST_CASE("reports serialize")
{
    const auto t = construct({2, 2, 2, 1});
    const auto v = to_json(validate(t));
    CHECK(v.contains("valid"));
    const auto s = to_json(score_bruteforce(t));
    CHECK(s.at("S").get<std::int64_t>() == score_bruteforce(t).total);
}
