#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "famalg/config.hpp"
#include "famalg/matrix.hpp"
#include "famalg/suites.hpp"

namespace famalg {

inline constexpr const char* report_schema = "famalg-report/1";

/// Algebra and representation as they would be written in a spec file,
/// brackets listed once per pair i < j.
nlohmann::json spec_json(const AlgebraSpec& spec);

/// Rows of entry expressions, e.g. [["1/2*h", "f"], ["e", "-1/2*h"]].
nlohmann::json matrix_json(const MatPoly& a, const NameList& names);
/// Inverse of matrix_json. Throws ParseError or DimensionError.
MatPoly matrix_from_json(const nlohmann::json& rows, const NameList& names, int d);

/// Wall time is left out unless `timing` is set, so reports stay
/// byte-identical between runs.
nlohmann::json suite_json(const SuiteReport& r, bool timing);
std::string suite_text(const SuiteReport& r, bool timing);

/// Stable two-space-indented serialization with a trailing newline.
std::string dump(const nlohmann::json& doc);

} // namespace famalg
