#pragma once

#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// Transpose-negate on the support: entry (i,j) is -a(j,i) where a(j,i) is
/// finite, BOTTOM elsewhere. For a monomial matrix this is the exact inverse.
Matrix pseudo_inverse(const Matrix& a);

/// True iff A has exactly one finite entry in every row and every column,
/// i.e. A factors as an invertible diagonal times a permutation.
bool is_monomial(const Matrix& a);

/// Generator of the full cone {x : x <= A x} of a monomial matrix: the
/// Kleene star of the pseudo-inverse; every solution is a max-plus
/// combination of its columns. Throws precondition_error when A is not
/// monomial or the star diverges.
Matrix monomial_cone(const Matrix& a);

/// Non-trivial solutions of an all-positive system, built from the combined
/// pseudo-inverse and its star.
struct PositiveSystem {
    std::vector<Matrix> matrices;  // the positive system A_1..A_L
    Matrix combined_inverse;       // A^-
    Matrix inverse_star;           // A^-*
    Matrix sharp;                  // A^#, columns filtered to solve x <= A_k x
    std::size_t nontrivial_columns = 0;
};

/// Column filtering of the star: each column is reduced, by zeroing entries
/// that break it, until it solves x <= A_k x for every system matrix. A
/// column may degrade to all-BOTTOM. Every retained column and every
/// max-plus combination of columns solves the whole system.
PositiveSystem sharp_matrix(std::vector<Matrix> matrices);

}  // namespace tropical
