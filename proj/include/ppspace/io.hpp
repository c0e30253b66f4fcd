#pragma once

#include <string>
#include <string_view>

#include "ppspace/axioms.hpp"
#include "ppspace/incidence.hpp"
#include "ppspace/theorems.hpp"

namespace ppspace {

/// Textual structure document, bit-exact:
///
///   INCIDENCE v1
///   points <n>
///   planes <m>
///   <n rows, each an m-character string over {0,1}>
///
/// Rows are points, columns are planes, character j of row i is '1' iff
/// point i is incident with plane j. Every line ends with a single LF and
/// the document ends immediately after the last row. parse and serialize
/// are exact inverses on valid documents.
std::string serialize_structure(const IncidenceStructure& s);

/// Throws ParseError with a 1-based line/column position: Kind::format for
/// header problems, Kind::shape for row count/length mismatches,
/// Kind::content for characters outside {0,1}.
IncidenceStructure parse_structure(std::string_view text);

/// One stable report line: `<ITEM> PASS|FAIL [witness=(...)] cases=<n>`.
/// Witness elements are rendered P<i> for points, pi<i> for planes and
/// ln<i> for line-table ids.
std::string format_report(const AxiomReport& report);
std::string format_report(const TheoremReport& report);

}  // namespace ppspace
