#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropical/map_model.hpp"
#include "tropical/nonpositive.hpp"

namespace tropical {

/// Finite value set for exhaustive enumeration; always contains BOTTOM and is
/// kept ascending.
struct Grid {
    std::vector<Scalar> values;

    static Grid integers(std::int64_t m);
    /// BOTTOM plus the integers within max |offset| + n in magnitude, wide
    /// enough that every saturation constant of the system lies inside.
    static Grid for_system(const MapSystem& sys);

    std::uint64_t combinations(std::size_t n, std::uint64_t budget) const;
};

/// Direct semantics: every atom evaluated in extended-real arithmetic, plus
/// pinned variables at BOTTOM. Independent of the matrix pipeline.
bool check(const std::vector<Scalar>& x, const MapSystem& sys);

/// All grid vectors satisfying check, in lexicographic order. Throws
/// budget_error when |values|^n exceeds the budget. Enumeration is striped
/// across threads; the merged order stays lexicographic.
std::vector<std::vector<Scalar>> grid_enumerate(const MapSystem& sys, const Grid& g,
                                                std::uint64_t budget = 10'000'000);
/// Reference single-threaded enumeration.
std::vector<std::vector<Scalar>> grid_enumerate_serial(const MapSystem& sys, const Grid& g,
                                                       std::uint64_t budget = 10'000'000);

/// Exhaustive comparison of a solution description against the grid-level
/// ground truth of a system (over original variables, pinned included).
struct CompletenessReport {
    std::uint64_t solutions = 0;
    std::uint64_t dominated = 0;    // x <= sup_solution at x's free components
    std::uint64_t represented = 0;  // x equals a family member exactly
    std::string warning;            // set when representation falls short

    bool fully_dominated() const { return dominated == solutions; }
    std::string summary() const;
};

CompletenessReport completeness_report(const SolutionDescription& desc, const MapSystem& sys,
                                       const Grid& g, std::uint64_t budget = 10'000'000);

}  // namespace tropical
