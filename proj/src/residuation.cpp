#include "tropical/residuation.hpp"

#include "tropical/errors.hpp"

namespace tropical {

UpperMatrix entrywise_min(const UpperMatrix& a, const UpperMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrix min: shape mismatch");
    UpperMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = min(a.at(i, j), b.at(i, j));
    return c;
}

bool leq(const UpperMatrix& a, const UpperMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrix compare: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) > b.at(i, j)) return false;
    return true;
}

bool leq(const Matrix& a, const UpperMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("matrix compare: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (UpperScalar::of(a.at(i, j)) > b.at(i, j)) return false;
    return true;
}

UpperMatrix residual(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw dimension_error("residual: row mismatch");
    const std::size_t m = a.rows(), n = a.cols(), q = b.cols();
    UpperMatrix x(n, q);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            UpperScalar acc = UpperScalar::top();
            for (std::size_t k = 0; k < m; ++k)
                acc = min(acc, minplus_mul(UpperScalar::inverse(a.at(k, i)), b.at(k, j)));
            x.at(i, j) = acc;
        }
    }
    return x;
}

}  // namespace tropical
