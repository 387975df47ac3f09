#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/rational.hpp"

namespace tropical {

/// One inequality x_lhs <= offset + max(x over rhs). rhs holds one or two
/// distinct variable indices, sorted; max(y, y) collapses to the single
/// target form on construction.
struct Atom {
    int lhs = 0;
    Rational offset{};
    std::vector<int> rhs;

    bool strictly_negative() const { return offset.is_negative(); }
    bool references(int var) const;
    std::string str(const std::vector<std::string>& names) const;

    friend bool operator==(const Atom& a, const Atom& b) = default;
};

/// A parsed atom system: variables in first-appearance order, the atom list,
/// and the set of variables preprocessing pinned to BOTTOM.
struct MapSystem {
    std::vector<std::string> names;
    std::vector<Atom> atoms;
    std::vector<int> forced_bottom;  // sorted variable indices

    std::size_t n() const { return names.size(); }
    bool pinned(int var) const;

    struct Stats {
        std::vector<std::size_t> negative_per_var;  // m_i^-
        std::vector<std::size_t> positive_per_var;  // m_i^+
        std::size_t max_negative = 0;               // max_i m_i^-
    };
    Stats stats() const;
};

/// Parse the atom-file grammar. One atom per line, '#' starts a comment:
///   line := var "<=" [ number "+" ] rhs
///   rhs  := var | "max(" var [ "," var ] ")"
/// Omitted number means 0. Throws parse_error with line/column.
MapSystem parse_atoms(std::string_view text);

/// Simplification to a fixed point:
///  - drop x <= a + max(x, y) with a >= 0 (always true),
///  - rewrite x <= a + max(x, y), a < 0, to x <= a + y,
///  - x <= a + x with a < 0 pins x to BOTTOM,
///  - pinned variables disappear from every max; an atom whose right side
///    empties pins its left side, and atoms with a pinned left side drop.
MapSystem preprocess(MapSystem sys);

enum class Classification { all_positive, has_negative };

/// AllPositive iff no variable retains a strictly negative atom.
Classification classify(const MapSystem& sys);

/// Remove pinned variables entirely. kept[r] is the original index of
/// reduced variable r. Requires a preprocessed system (no atom may still
/// reference a pinned variable).
MapSystem drop_pinned(const MapSystem& sys, std::vector<int>& kept);

/// The ordered matrix system [A_1..A_l | A_(l+1)..A_L] equivalent to the
/// conjunction of atoms: x solves every atom iff x <= A x for every matrix.
struct MatrixSystem {
    std::vector<Matrix> negative;
    std::vector<Matrix> positive;
};

/// Matrix filling. Per variable, the strictly negative and the positive atom
/// rows are kept in separate lists, sorted ascending by offset (ties by
/// right-hand-side index tuple) and deduplicated, each list terminated by the
/// unit row e_i. Matrices pop list heads, reusing e_i once a list runs out,
/// until every list is exhausted; the negative part always yields at least
/// one matrix (possibly the identity), as does the positive part.
/// Requires an empty forced_bottom set.
MatrixSystem fill_matrices(const MapSystem& sys);

}  // namespace tropical
