#pragma once

#include <cstddef>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

/// Matrix over UpperScalar. Residuation results live here, since a quotient
/// can be unbounded (TOP) where the divisor column is all BOTTOM.
class UpperMatrix {
public:
    UpperMatrix() = default;
    UpperMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static UpperMatrix of(const Matrix& m) {
        UpperMatrix u(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) u.at(i, j) = UpperScalar::of(m.at(i, j));
        return u;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    UpperScalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const UpperScalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Replace TOP entries by the given finite stand-in.
    Matrix clamp(Scalar top_value) const {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).clamp(top_value);
        return m;
    }

    friend bool operator==(const UpperMatrix& a, const UpperMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<UpperScalar> data_;
};

UpperMatrix entrywise_min(const UpperMatrix& a, const UpperMatrix& b);
bool leq(const UpperMatrix& a, const UpperMatrix& b);
/// a <= b with a over plain scalars (no TOP on the left).
bool leq(const Matrix& a, const UpperMatrix& b);

/// Greatest X with A * X <= B, for A m-by-n and B m-by-q. Entry (i,j) is
/// min over k of a(k,i)^-1 + b(k,j), a min-plus product using the inversion
/// map and the TOP conventions of UpperScalar.
UpperMatrix residual(const Matrix& a, const Matrix& b);

}  // namespace tropical
