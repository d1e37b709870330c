#pragma once

#include "degtab/bounds.hpp"
#include "degtab/degree_table.hpp"
#include "degtab/field.hpp"
#include "degtab/search.hpp"

#include <json.hpp>

namespace degtab {

using Json = nlohmann::ordered_json;

Json to_json(const DegreeTable& t);

/// Reads {"K","L","T","alpha_p","alpha_s","beta_p","beta_s"}. Throws
/// StructuralError on missing fields, non-integers or wrong lengths.
DegreeTable table_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const ScoreBreakdown& s);
Json to_json(const BoundsReport& r);
Json to_json(const SearchResult& r);
Json to_json(const Matrix& m);

}  // namespace degtab
