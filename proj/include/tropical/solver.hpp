#pragma once

#include <optional>

#include "tropical/map_model.hpp"
#include "tropical/nonpositive.hpp"
#include "tropical/positive.hpp"

namespace tropical {

/// End-to-end result of preprocess -> classify -> solve on a parsed system.
struct SolveResult {
    MapSystem preprocessed;  // full system, pinned variables recorded
    MapSystem reduced;       // pinned variables dropped
    std::vector<int> kept;   // reduced index -> original index
    MatrixSystem matrices;   // fill output over the reduced system

    Classification classification = Classification::all_positive;
    std::optional<SolutionDescription> description;  // HasNegative route
    std::optional<PositiveSystem> positive;          // AllPositive route
};

SolveResult solve_system(const MapSystem& parsed);

}  // namespace tropical
