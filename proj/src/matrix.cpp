#include "tropical/matrix.hpp"

#include <exception>

#include "tropical/errors.hpp"

namespace tropical {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error(std::string(op) + ": shape mismatch");
}

}  // namespace

bool Matrix::row_is_unit(std::size_t i) const {
    for (std::size_t j = 0; j < cols_; ++j) {
        const Scalar& v = at(i, j);
        if (j == i ? v != Scalar::one() : !v.is_bottom()) return false;
    }
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!row_is_unit(i)) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "matrix add");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

Matrix entrywise_min(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "matrix min");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = min(a.at(i, j), b.at(i, j));
    return c;
}

bool leq(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "matrix compare");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) > b.at(i, j)) return false;
    return true;
}

namespace {

// i-k-j relaxation; skipping BOTTOM pivots makes sparse operands cheap.
inline void mul_row(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_bottom()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar term = aik * b.at(k, j);
            if (c.at(i, j) < term) c.at(i, j) = term;
        }
    }
}

}  // namespace

Matrix mul_serial(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("matrix product: inner dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) mul_row(a, b, c, i);
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw dimension_error("matrix product: inner dimension mismatch");
    Matrix c(a.rows(), b.cols());
    const std::int64_t n = static_cast<std::int64_t>(a.rows());
    std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (n * static_cast<std::int64_t>(b.cols()) >= 4096)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            mul_row(a, b, c, static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return c;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw dimension_error("vstack: column mismatch");
    Matrix c(top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < top.cols(); ++j) c.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i)
        for (std::size_t j = 0; j < bottom.cols(); ++j) c.at(top.rows() + i, j) = bottom.at(i, j);
    return c;
}

Matrix submatrix(const Matrix& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    if (r1 < r0 || c1 < c0 || r1 > a.rows() || c1 > a.cols())
        throw dimension_error("submatrix: bad range");
    Matrix c(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) c.at(i - r0, j - c0) = a.at(i, j);
    return c;
}

std::vector<Scalar> mul_vec(const Matrix& a, const std::vector<Scalar>& x) {
    if (a.cols() != x.size()) throw dimension_error("matrix-vector product: dimension mismatch");
    std::vector<Scalar> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) y[i] = y[i] + a.at(i, k) * x[k];
    return y;
}

}  // namespace tropical
