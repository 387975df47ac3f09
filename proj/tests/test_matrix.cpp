#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "helpers.hpp"
#include "tropical/errors.hpp"
#include "tropical/matrix.hpp"

using namespace tropical;
using testutil::mat;
using testutil::vec;

TEST_SUITE("matrix") {

TEST_CASE("add is entrywise max with the zero matrix as unit") {
    Matrix a = mat("1 -inf; 2 0");
    CHECK(a + Matrix::zeros(2, 2) == a);
    CHECK(mat("1") + mat("3") == mat("3"));
    CHECK_THROWS_AS(a + Matrix::zeros(2, 3), dimension_error);
}

TEST_CASE("entrywise min") {
    Matrix a = mat("0 -1");
    CHECK(entrywise_min(a, a) == a);
    CHECK(entrywise_min(mat("0 -1"), mat("-2 5")) == mat("-2 -1"));
    CHECK_THROWS_AS(entrywise_min(a, mat("0")), dimension_error);
}

TEST_CASE("product has the identity as a two-sided unit") {
    std::mt19937 rng(3);
    Matrix b = testutil::random_matrix(rng, 4, 4);
    CHECK(Matrix::identity(4) * b == b);
    CHECK(b * Matrix::identity(4) == b);
    CHECK_THROWS_AS(b * Matrix::zeros(3, 3), dimension_error);
}

TEST_CASE("worked products from the four-variable example") {
    // C_1* B_1 for the negative part.
    Matrix c1_star = mat("0 -inf; -1 0");
    Matrix b1 = mat("-10 -inf; -inf -1");
    CHECK(c1_star * b1 == mat("-10 -inf; -11 -1"));

    // A_2 t_1 for the free-variable test.
    Matrix a2 = mat("-inf 9 9 -inf; -inf -inf -inf 0; -inf -inf 0 -inf; -inf 25 25 -inf");
    Matrix t1 = Matrix::column(vec("0 -inf -10 -11"));
    CHECK(a2 * t1 == Matrix::column(vec("-1 -11 -10 15")));
}

TEST_CASE("comparison") {
    std::mt19937 rng(4);
    Matrix a = testutil::random_matrix(rng, 3, 5);
    CHECK(leq(Matrix::zeros(3, 5), a));

    Matrix a2 = mat("-inf 9 9 -inf; -inf -inf -inf 0; -inf -inf 0 -inf; -inf 25 25 -inf");
    Matrix t1 = Matrix::column(vec("0 -inf -10 -11"));
    CHECK_FALSE(leq(t1, a2 * t1));  // 0 <= -1 fails in the first row
}

TEST_CASE("product is monotone") {
    std::mt19937 rng(5);
    for (int i = 0; i < 60; ++i) {
        Matrix a = testutil::random_matrix(rng, 3, 4);
        Matrix b = testutil::random_matrix(rng, 4, 3);
        Matrix bigger = a;
        for (std::size_t r = 0; r < bigger.rows(); ++r)
            for (std::size_t c = 0; c < bigger.cols(); ++c)
                bigger.at(r, c) = bigger.at(r, c) + testutil::random_scalar(rng);
        CHECK(leq(a * b, bigger * b));
        CHECK(leq(b * a, b * bigger));
    }
}

TEST_CASE("blocks") {
    Matrix a = mat("1 2; 3 4");
    Matrix b = mat("5 6");
    CHECK(vstack(a, b) == mat("1 2; 3 4; 5 6"));
    CHECK(submatrix(vstack(a, b), 2, 3, 0, 2) == b);
    CHECK(Matrix::identity(3).row_is_unit(1));
    CHECK_FALSE(mat("0 0; -inf 0").row_is_unit(0));
}

}  // TEST_SUITE
