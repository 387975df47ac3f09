#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "helpers.hpp"
#include "systems.hpp"
#include "tropical/errors.hpp"
#include "tropical/map_model.hpp"
#include "tropical/oracle.hpp"

using namespace tropical;
using testutil::mat;

TEST_SUITE("map_model") {

TEST_CASE("parsing the documented forms") {
    MapSystem s = parse_atoms("x3 <= -10 + max(x1)\nx2 <= x4\nx4 <= 25 + max(x2, x3)\n");
    REQUIRE(s.atoms.size() == 3);
    CHECK(s.names == std::vector<std::string>{"x3", "x1", "x2", "x4"});

    CHECK(s.atoms[0].lhs == 0);
    CHECK(s.atoms[0].offset == Rational(-10));
    CHECK(s.atoms[0].rhs == std::vector<int>{1});

    CHECK(s.atoms[1].offset == Rational(0));  // omitted number means 0
    CHECK(s.atoms[1].rhs == std::vector<int>{3});

    CHECK(s.atoms[2].offset == Rational(25));
    CHECK(s.atoms[2].rhs.size() == 2);
}

TEST_CASE("comments, blank lines, rationals, duplicate targets") {
    MapSystem s = parse_atoms("# header\n\na <= 0.5 + max(b, b)  # trailing\n");
    REQUIRE(s.atoms.size() == 1);
    CHECK(s.atoms[0].offset == Rational(1, 2));
    CHECK(s.atoms[0].rhs.size() == 1);  // max(b, b) collapses
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_atoms("x <= y\nz <= !\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.column >= 6);
    }
    CHECK_THROWS_AS(parse_atoms("x < y\n"), parse_error);
    CHECK_THROWS_AS(parse_atoms("x <= 3 +\n"), parse_error);
    CHECK_THROWS_AS(parse_atoms("x <= max(y\n"), parse_error);
    CHECK_THROWS_AS(parse_atoms("x <= y z\n"), parse_error);
}

TEST_CASE("a variable may be called max") {
    MapSystem s = parse_atoms("x <= max\nmax <= 1 + x\n");
    CHECK(s.n() == 2);
    CHECK(s.atoms[0].rhs == std::vector<int>{1});
}

TEST_CASE("preprocess drops tautologies") {
    MapSystem s = preprocess(parse_atoms("x <= 2 + max(x, y)\n"));
    CHECK(s.atoms.empty());
    CHECK(s.forced_bottom.empty());
}

TEST_CASE("preprocess rewrites negative self-references") {
    MapSystem s = preprocess(parse_atoms("x <= -3 + max(x, y)\n"));
    REQUIRE(s.atoms.size() == 1);
    CHECK(s.atoms[0].rhs == std::vector<int>{1});
    CHECK(s.atoms[0].offset == Rational(-3));
}

TEST_CASE("preprocess pins pure self-loops and propagates") {
    MapSystem s = preprocess(parse_atoms("x <= -3 + x\ny <= -1 + x\nz <= max(y, w)\n"));
    // x pins itself, y's only target vanishes so y pins, z keeps only w.
    CHECK(s.forced_bottom == std::vector<int>{0, 1});
    REQUIRE(s.atoms.size() == 1);
    CHECK(s.atoms[0].rhs == std::vector<int>{3});
}

TEST_CASE("classification") {
    CHECK(classify(preprocess(parse_atoms(testutil::kSystemPrime))) ==
          Classification::has_negative);
    CHECK(classify(preprocess(parse_atoms(testutil::kSystemPositive))) ==
          Classification::all_positive);
    CHECK(classify(MapSystem{}) == Classification::all_positive);
}

TEST_CASE("stats count atoms per side") {
    MapSystem s = preprocess(parse_atoms(testutil::kSystemPrime));
    MapSystem::Stats st = s.stats();
    CHECK(st.max_negative == 1);
    std::size_t total = 0;
    for (std::size_t i = 0; i < s.n(); ++i)
        total += st.negative_per_var[i] + st.positive_per_var[i];
    CHECK(total == s.atoms.size());
}

TEST_CASE("matrix filling reproduces the worked negative and positive parts") {
    MapSystem s = preprocess(parse_atoms(testutil::kSystemPrime));
    MatrixSystem ms = fill_matrices(s);
    REQUIRE(ms.negative.size() == 1);
    REQUIRE(ms.positive.size() == 1);

    Matrix a1 = mat(
        "0 -inf -inf -inf;"
        "-inf 0 -inf -inf;"
        "-10 -inf -inf -inf;"
        "-inf -1 -1 -inf");
    CHECK(ms.negative[0] == a1);
    CHECK(submatrix(ms.negative[0], 2, 4, 0, 2) == mat("-10 -inf; -inf -1"));  // B_1
    CHECK(submatrix(ms.negative[0], 2, 4, 2, 4) == mat("-inf -inf; -1 -inf"));  // C_1

    Matrix a2 = mat(
        "-inf 9 9 -inf;"
        "-inf -inf -inf 0;"
        "-inf -inf 0 -inf;"
        "-inf 25 25 -inf");
    CHECK(ms.positive[0] == a2);
}

TEST_CASE("the looser system differs only in the positive part") {
    MatrixSystem ms = fill_matrices(preprocess(parse_atoms(testutil::kSystemSecond)));
    Matrix a2p = mat(
        "-inf 12 12 -inf;"
        "-inf -inf -inf 0;"
        "-inf -inf 0 -inf;"
        "-inf 25 25 -inf");
    CHECK(ms.positive[0] == a2p);
    CHECK(ms.negative[0] == fill_matrices(preprocess(parse_atoms(testutil::kSystemPrime))).negative[0]);
}

TEST_CASE("one negative atom per variable gives a single matrix plus identity") {
    MapSystem s = preprocess(parse_atoms("a <= -1 + b\nb <= -2 + a\n"));
    MatrixSystem ms = fill_matrices(s);
    CHECK(ms.negative.size() == 1);
    REQUIRE(ms.positive.size() == 1);
    CHECK(ms.positive[0] == Matrix::identity(2));
}

TEST_CASE("deeper lists pad exhausted rows with unit rows") {
    MapSystem s = preprocess(parse_atoms("a <= -1 + b\na <= -3 + c\nb <= -2 + c\n"));
    MatrixSystem ms = fill_matrices(s);
    REQUIRE(ms.negative.size() == 2);
    // Ascending offsets: the tightest atom of each variable lands first.
    CHECK(ms.negative[0].at(0, 2) == Scalar::of(-3));
    CHECK(ms.negative[1].at(0, 1) == Scalar::of(-1));
    CHECK(ms.negative[1].row_is_unit(1));  // b's list is exhausted
}

TEST_CASE("row accounting: each distinct atom appears as exactly one row") {
    std::mt19937 rng(12);
    for (int iter = 0; iter < 80; ++iter) {
        MapSystem s = preprocess(testutil::random_system(rng, 4, 7, 3, 0.5));
        std::vector<int> kept;
        s = drop_pinned(s, kept);
        if (s.n() == 0) continue;
        MatrixSystem ms = fill_matrices(s);

        std::set<std::pair<int, std::vector<Scalar>>> atom_rows, matrix_rows;
        for (const Atom& a : s.atoms) {
            std::vector<Scalar> row(s.n(), Scalar::bottom());
            for (int v : a.rhs) row[v] = Scalar(a.offset);
            atom_rows.insert({a.lhs, row});
        }
        std::size_t nontrivial = 0;
        for (const auto* part : {&ms.negative, &ms.positive})
            for (const Matrix& m : *part)
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    if (m.row_is_unit(i)) continue;
                    ++nontrivial;
                    std::vector<Scalar> row(m.cols());
                    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
                    matrix_rows.insert({static_cast<int>(i), row});
                }
        CHECK(atom_rows == matrix_rows);
        CHECK(nontrivial == atom_rows.size());
    }
}

TEST_CASE("pipeline is deterministic") {
    MapSystem a = preprocess(parse_atoms(testutil::kSystemSecond));
    MapSystem b = preprocess(parse_atoms(testutil::kSystemSecond));
    MatrixSystem ma = fill_matrices(a);
    MatrixSystem mb = fill_matrices(b);
    CHECK(ma.negative == mb.negative);
    CHECK(ma.positive == mb.positive);
}

TEST_CASE("atoms hold iff x <= A x for every filled matrix") {
    std::mt19937 rng(13);
    Grid g = Grid::integers(6);
    for (int iter = 0; iter < 40; ++iter) {
        MapSystem s = preprocess(testutil::random_system(rng, 3, 5, 3, 0.5));
        std::vector<int> kept;
        MapSystem r = drop_pinned(s, kept);
        if (r.n() == 0) continue;
        MatrixSystem ms = fill_matrices(r);

        std::vector<std::size_t> idx(r.n(), 0);
        std::vector<Scalar> x(r.n());
        for (;;) {
            for (std::size_t i = 0; i < r.n(); ++i) x[i] = g.values[idx[i]];
            bool direct = check(x, r);
            bool algebraic = true;
            Matrix col = Matrix::column(x);
            for (const auto* part : {&ms.negative, &ms.positive})
                for (const Matrix& m : *part) algebraic = algebraic && leq(col, m * col);
            CHECK(direct == algebraic);

            std::size_t d = 0;
            while (d < idx.size() && ++idx[d] == g.values.size()) idx[d++] = 0;
            if (d == idx.size()) break;
        }
    }
}

TEST_CASE("preprocessing preserves the solution set on the grid") {
    std::mt19937 rng(14);
    Grid g = Grid::integers(4);
    for (int iter = 0; iter < 40; ++iter) {
        MapSystem raw = testutil::random_system(rng, 3, 5, 3, 0.5);
        // Inject a self-referential atom to exercise the rewrite rules.
        Atom self;
        self.lhs = 0;
        self.offset = Rational(iter % 2 == 0 ? 2 : -2);
        self.rhs = {0, 1 + (iter % 2)};
        raw.atoms.push_back(self);
        MapSystem cooked = preprocess(raw);

        std::vector<std::size_t> idx(raw.n(), 0);
        std::vector<Scalar> x(raw.n());
        for (;;) {
            for (std::size_t i = 0; i < raw.n(); ++i) x[i] = g.values[idx[i]];
            CHECK(check(x, raw) == check(x, cooked));
            std::size_t d = 0;
            while (d < idx.size() && ++idx[d] == g.values.size()) idx[d++] = 0;
            if (d == idx.size()) break;
        }
    }
}

TEST_CASE("fill rejects unpreprocessed input") {
    MapSystem s = parse_atoms("x <= -1 + x\n");
    CHECK_THROWS_AS(fill_matrices(s), precondition_error);
}

}  // TEST_SUITE
