#pragma once

#include <cstddef>
#include <vector>

#include "tropical/scalar.hpp"

namespace tropical {

/// Dense rectangular matrix over the max-plus semiring, row major.
///
/// `A + B` is the entrywise max, `A * B` the max-plus product. All shaped
/// operations throw dimension_error on mismatch. A default-constructed entry
/// is BOTTOM, so Matrix(r, c) is the zero matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
        return m;
    }
    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix column(const std::vector<Scalar>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// True when row i equals the canonical basis row e_i (square matrices).
    bool row_is_unit(std::size_t i) const;
    bool is_identity() const;

    std::vector<Scalar> column_vec(std::size_t j) const {
        std::vector<Scalar> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Entrywise max.
Matrix operator+(const Matrix& a, const Matrix& b);
/// Entrywise min.
Matrix entrywise_min(const Matrix& a, const Matrix& b);
/// Max-plus product. Parallel over output rows for large operands.
Matrix operator*(const Matrix& a, const Matrix& b);
/// Reference product kernel, plain triple loop, no threading.
Matrix mul_serial(const Matrix& a, const Matrix& b);
/// Entrywise comparison a <= b.
bool leq(const Matrix& a, const Matrix& b);

Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix submatrix(const Matrix& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1);

std::vector<Scalar> mul_vec(const Matrix& a, const std::vector<Scalar>& x);

}  // namespace tropical
