#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropical/map_model.hpp"
#include "tropical/residuation.hpp"

namespace tropical {

/// Indices whose row in A equals the canonical basis row e_i; equivalently
/// the vertices of G(A) without a predecessor besides themselves.
std::vector<int> free_variables(const Matrix& a);

namespace detail {

/// One max-plus linear constraint: x[lhs] <= max over terms of (w + x[var]).
struct LinRow {
    int lhs = 0;
    std::vector<std::pair<int, Scalar>> terms;
};

/// Non-unit rows of a square matrix as constraints.
std::vector<LinRow> rows_of(const Matrix& a);
/// Atoms as constraints, optionally relabeled through a variable->slot map.
std::vector<LinRow> rows_of(const std::vector<Atom>& atoms, const std::vector<int>* var_to_slot);

bool satisfies(const std::vector<Scalar>& x, const std::vector<LinRow>& rows);

/// Greatest y <= x0 with y[lhs] <= bound(y) for every row, by monotone
/// descent. Entries that sink below every value an acyclic derivation could
/// produce are exact BOTTOMs and are pinned there.
std::vector<Scalar> greatest_subsolution(std::vector<Scalar> x0, const std::vector<LinRow>& rows);

/// P a P^T for the position->index permutation perm.
Matrix permute(const Matrix& a, const std::vector<int>& perm);

}  // namespace detail

/// Outcome of folding the stage-1 subsystem x <= A_i x. The fold takes every
/// negative matrix and any positive matrix that has the free-variables block
/// shape and whose lower-right block admits a Kleene star. T^ starts from the
/// per-matrix saturations C_i* B_i (unit rows contributing no constraint) and
/// is then projected down to a simultaneous solution of the folded subsystem,
/// which can tighten it when the negative part spans several matrices.
struct Stage1Result {
    enum class Outcome { ok, only_bottom, identity_system };
    Outcome outcome = Outcome::ok;

    std::size_t n = 0;
    std::size_t k = 0;                 // free-variable count
    std::vector<int> perm;             // permuted position -> variable index, free first
    std::size_t folded_count = 0;      // l'
    std::vector<bool> positive_folded; // per positive matrix of the input system
    Matrix t_wedge;                    // n x k, top block I_k
    std::vector<Matrix> folded;        // folded matrices, permuted
};

Stage1Result stage1(const MatrixSystem& ms);

/// Parametric description of the solution set of a non-positive system.
/// Positions are ordered (u1 | ubar1 | ubar): surviving free variables,
/// non-surviving free variables, bound variables.
struct SolutionDescription {
    enum class Status { only_bottom, complete, reduced };
    Status status = Status::only_bottom;

    std::size_t n = 0;        // reduced variable count
    std::size_t k = 0;        // free count
    std::size_t k_prime = 0;  // surviving free count
    std::vector<int> perm;    // permuted position -> reduced variable index
    Matrix t_wedge;           // n x k in the final permutation
    Matrix j_block;           // (n-k) x k'
    Matrix k_block;           // (n-k) x (k-k')
    UpperMatrix f_wedge;      // (k-k') x k', greatest feasible parameter bound
    Scalar clamp_value;       // finite stand-in for TOP entries

    // Original-space bookkeeping, attached by the pipeline.
    std::vector<std::string> names;  // original variable names
    std::vector<int> kept;           // reduced index -> original index
    std::vector<int> pinned;         // original indices pinned to BOTTOM
    std::size_t n_original = 0;

    // Constraint rows of the whole reduced system in permuted coordinates;
    // used for the feasibility projection of sampled vectors.
    std::vector<detail::LinRow> rows;
};

/// Free-variable test of the stage-1 columns against the unfolded matrices,
/// partitioning, and the residuated parameter bound F^. Each surviving column
/// of the result is feasible for the full system.
SolutionDescription stage2(const Stage1Result& s1, const std::vector<Matrix>& positives);

/// x = [I; F^; J + K F^] u1, mapped back to the original variable order with
/// pinned variables at BOTTOM. Throws precondition_error for OnlyBottom.
std::vector<Scalar> sup_solution(const SolutionDescription& d, const std::vector<Scalar>& u1);

/// x = T^ (D; F) u1 for a diagonal D <= I and F <= F^, projected onto the
/// solution set from above so the result always satisfies every atom.
std::vector<Scalar> sample_solution(const SolutionDescription& d, const std::vector<Scalar>& u1,
                                    const std::vector<Scalar>& diag, const Matrix& f);

}  // namespace tropical
