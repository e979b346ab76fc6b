#pragma once

#include <json.hpp>

#include "frey/padic.hpp"
#include "frey/search.hpp"
#include "frey/symplectic.hpp"

namespace frey {

using Json = nlohmann::json;

// Curve-list file format: {"field": {"r": 5}, "curves": [{"label": ...,
// "a_invariants": [[..], ..], "full_two_torsion": bool,
// "two_torsion_roots": [[..] x3], "minimal_valuations":
// [{"q": 2, "g": [..], "v": 4}, ...]}]}. Coefficient vectors are ascending
// in z, entries integers or decimal strings. Every record is validated on
// load.
std::vector<CurveOverKRecord> load_curve_file(const std::string& path, const FieldPtr& expected_field);
std::vector<CurveOverKRecord> parse_curve_list(const Json& doc, const FieldPtr& expected_field);

Json to_json(const DensityReport& rep);
DensityReport density_report_from_json(const Json& j);

Json to_json(const SymplecticReport& rep);
SymplecticReport symplectic_report_from_json(const Json& j);

Json to_json(const PadicEliminationResult& rep);
PadicEliminationResult padic_result_from_json(const Json& j);

Json to_json(const std::vector<SolutionRecord>& solutions);
std::vector<SolutionRecord> solutions_from_json(const Json& j);

Json to_json(const IdentityReport& rep);

// Serialize deterministically (sorted keys, fixed indent, trailing newline).
std::string dump_report(const Json& j);

}  // namespace frey
