#include "degtab/json_io.hpp"

#include <string>

namespace degtab {

Json to_json(const DegreeTable& t)
{
    return Json{{"K", t.K}, {"L", t.L}, {"T", t.T}, {"alpha_p", t.alpha_p}, {"alpha_s", t.alpha_s}, {"beta_p", t.beta_p}, {"beta_s", t.beta_s}};
}

namespace {

int read_param(const Json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer()) throw StructuralError(std::string("field '") + key + "' must be an integer");
    const auto v = j[key].get<std::int64_t>();
    if (v < 1 || v > 1'000'000) throw StructuralError(std::string("field '") + key + "' out of range");
    return static_cast<int>(v);
}

ExponentVector read_vector(const Json& j, const char* key, int length)
{
    if (!j.contains(key) || !j[key].is_array()) throw StructuralError(std::string("field '") + key + "' must be an array");
    ExponentVector v;
    for (const auto& e : j[key]) {
        if (!e.is_number_integer()) throw StructuralError(std::string("field '") + key + "' must hold integers");
        v.push_back(e.get<Exponent>());
    }
    if (static_cast<int>(v.size()) != length) {
        throw StructuralError(std::string("field '") + key + "' must have length " + std::to_string(length));
    }
    return v;
}

}  // namespace

DegreeTable table_from_json(const Json& j)
{
    if (!j.is_object()) throw StructuralError("degree table must be a JSON object");
    DegreeTable t;
    t.K = read_param(j, "K");
    t.L = read_param(j, "L");
    t.T = read_param(j, "T");
    t.alpha_p = read_vector(j, "alpha_p", t.K);
    t.alpha_s = read_vector(j, "alpha_s", t.T);
    t.beta_p = read_vector(j, "beta_p", t.L);
    t.beta_s = read_vector(j, "beta_s", t.T);
    check_structure(t);
    return t;
}

Json to_json(const ValidationReport& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"condition", to_string(x.condition)}, {"witness", x.witness}});
    return Json{{"valid", r.valid()}, {"violations", v}};
}

Json to_json(const ScoreBreakdown& s) { return Json{{"left", s.left}, {"right", s.right}, {"S", s.total}}; }

Json to_json(const BoundsReport& r)
{
    Json j{{"K", r.K}, {"L", r.L}, {"T", r.T}, {"ineq1", r.lower.ineq1}};
    j["ineq2"] = r.lower.ineq2 ? Json(*r.lower.ineq2) : Json(nullptr);
    j["ineq2_large_product"] = r.lower.ineq2_large_product;
    j["ineq2_square"] = r.lower.ineq2_square;
    j["ineq3"] = r.lower.ineq3;
    j["best"] = r.lower.best;
    j["entry_bound_alpha"] = r.entry ? Json(r.entry->alpha) : Json(nullptr);
    j["entry_bound_beta"] = r.entry ? Json(r.entry->beta) : Json(nullptr);
    j["operational_threshold"] = r.operational_threshold ? Json(r.operational_threshold->str()) : Json(nullptr);
    return j;
}

Json to_json(const SearchResult& r)
{
    Json optima = Json::array(), raw = Json::array();
    for (const auto& t : r.optima) optima.push_back(to_json(t));
    for (const auto& t : r.raw_optima) raw.push_back(to_json(t));
    return Json{{"best_N", r.best_N},
                {"optima_count", r.optima.size()},
                {"raw_optima_count", r.raw_optima.size()},
                {"tables_examined", r.tables_examined},
                {"valid_tables", r.valid_tables},
                {"alpha_candidates", r.alpha_candidates},
                {"beta_candidates", r.beta_candidates},
                {"partial", r.partial},
                {"optima", optima},
                {"raw_optima", raw}};
}

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace degtab
