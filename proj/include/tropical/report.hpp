#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tropical/solver.hpp"

namespace tropical {

/// Presentation layer shared by the text and JSON outputs. Matrix blocks are
/// named; scalar cells serialize as exact integers, "p/q" strings, or the
/// "-inf"/"+inf" sentinels.
struct OutputReport {
    std::string classification;  // "AllPositive" | "HasNegative"
    std::string status;          // "OnlyBottom" | "Complete" | "Reduced" | "PositiveSharp"
    std::vector<std::string> variables;    // original order
    std::vector<std::string> pinned;       // names forced to BOTTOM
    std::vector<std::string> permutation;  // reduced names, (u1 | ubar1 | ubar) order
    std::vector<std::string> free_vars;    // stage-1 free block
    std::vector<std::string> surviving;    // u1 block
    std::size_t atom_count = 0;
    std::size_t nontrivial_columns = 0;  // positive route
    std::vector<std::pair<std::string, UpperMatrix>> matrices;
    std::vector<std::vector<Scalar>> samples;  // full original-length vectors
};

OutputReport build_report(const SolveResult& r);

nlohmann::json report_json(const OutputReport& rep);
std::string report_text(const OutputReport& rep);

/// One scalar as a JSON value: exact integer, "p/q" string, or sentinel.
nlohmann::json cell_json(const UpperScalar& v);

}  // namespace tropical
