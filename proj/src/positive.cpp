#include "tropical/positive.hpp"

#include <exception>
#include <set>

#include "tropical/errors.hpp"
#include "tropical/graph.hpp"

namespace tropical {

Matrix pseudo_inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw dimension_error("pseudo_inverse requires a square matrix");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a.at(j, i).is_bottom()) out.at(i, j) = Scalar(-a.at(j, i).rational());
    return out;
}

bool is_monomial(const Matrix& a) {
    if (a.rows() != a.cols()) throw dimension_error("is_monomial requires a square matrix");
    std::vector<int> col_hits(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_bottom()) continue;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    for (int c : col_hits)
        if (c != 1) return false;
    return true;
}

Matrix monomial_cone(const Matrix& a) {
    if (!is_monomial(a)) throw precondition_error("monomial_cone requires a monomial matrix");
    auto star = kleene_star(pseudo_inverse(a));
    if (!star)
        throw precondition_error("monomial_cone: inverse has a circuit above the unit");
    return *star;
}

PositiveSystem sharp_matrix(std::vector<Matrix> matrices) {
    if (matrices.empty()) throw precondition_error("sharp_matrix requires at least one matrix");
    const std::size_t n = matrices.front().rows();
    for (const Matrix& m : matrices)
        if (m.rows() != n || m.cols() != n)
            throw dimension_error("sharp_matrix: matrices must share a square shape");

    PositiveSystem sys;
    sys.combined_inverse = Matrix(n, n);
    for (const Matrix& m : matrices)
        sys.combined_inverse = sys.combined_inverse + pseudo_inverse(m);

    // All entries of the combined inverse sit at or below the unit, so no
    // circuit can outweigh it and the star always exists.
    auto star = kleene_star(sys.combined_inverse);
    if (!star) throw internal_error("combined pseudo-inverse has no Kleene star");
    sys.inverse_star = *star;

    sys.sharp = Matrix(n, n);
    const std::int64_t cols = static_cast<std::int64_t>(n);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (cols >= 8)
    for (std::int64_t j = 0; j < cols; ++j) {
        try {
            std::vector<Scalar> col = sys.inverse_star.column_vec(static_cast<std::size_t>(j));
            bool changed = true;
            while (changed) {
                changed = false;
                for (const Matrix& m : matrices) {
                    std::vector<Scalar> bound = mul_vec(m, col);
                    for (std::size_t i = 0; i < n; ++i) {
                        if (col[i] > bound[i]) {
                            col[i] = Scalar::bottom();
                            changed = true;
                        }
                    }
                }
            }
            for (std::size_t i = 0; i < n; ++i)
                sys.sharp.at(i, static_cast<std::size_t>(j)) = col[i];
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> col = sys.sharp.column_vec(j);
        for (const Matrix& m : matrices) {
            std::vector<Scalar> bound = mul_vec(m, col);
            for (std::size_t i = 0; i < n; ++i)
                if (col[i] > bound[i]) throw internal_error("sharp column fails its invariant");
        }
    }

    std::set<std::vector<Scalar>> distinct;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> col = sys.sharp.column_vec(j);
        bool trivial = true;
        for (const Scalar& v : col) trivial = trivial && v.is_bottom();
        if (!trivial) distinct.insert(col);
    }
    sys.nontrivial_columns = distinct.size();
    sys.matrices = std::move(matrices);
    return sys;
}

}  // namespace tropical
