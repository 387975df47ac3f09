#pragma once

#include <optional>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// Sign of the worst (heaviest) circuit in the weighted digraph of a matrix.
enum class CircuitSign { no_circuit, all_negative, has_zero, has_positive };

/// Structure of G(A): vertex j -> i carries an edge of weight a(i,j) when
/// that entry is finite.
struct GraphAnalysis {
    std::size_t scc_count = 0;
    std::vector<int> scc_of;              // vertex -> component id
    std::vector<int> condensation_order;  // component ids, topologically sorted
    CircuitSign circuit_sign = CircuitSign::no_circuit;
};

/// Strongly connected components plus circuit-weight classification.
/// Component ids are assigned in topological order of the condensation.
GraphAnalysis analyze_graph(const Matrix& a);

/// Longest-path relaxation per component; true iff some circuit has weight
/// above the multiplicative unit. Cheaper than a full analyze_graph.
bool has_positive_circuit(const Matrix& a);

/// I + A + A^2 + ... + A^(n-1), computed by repeated squaring of (I + A).
/// Empty when a circuit of weight above the unit exists.
std::optional<Matrix> kleene_star(const Matrix& a);

/// Greatest x with x <= A x + b, i.e. A* b. Requires every circuit of G(A)
/// strictly negative (or no circuit at all); throws precondition_error
/// otherwise. The result is verified to solve x = A x + b exactly.
Matrix saturate(const Matrix& a, const Matrix& b);

}  // namespace tropical
