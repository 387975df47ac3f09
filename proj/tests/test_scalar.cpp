#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "tropical/scalar.hpp"

using tropical::Rational;
using tropical::Scalar;
using tropical::UpperScalar;

TEST_SUITE("scalar") {

TEST_CASE("constants") {
    CHECK(Scalar::zero().is_bottom());
    CHECK(Scalar::one() == Scalar::of(0));
    CHECK(Scalar().is_bottom());
}

TEST_CASE("semiring laws hold on randomized scalars") {
    std::mt19937 rng(1);
    for (int i = 0; i < 250; ++i) {
        Scalar a = testutil::random_scalar(rng);
        Scalar b = testutil::random_scalar(rng);
        Scalar c = testutil::random_scalar(rng);

        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a + a == a);
        CHECK(a + Scalar::zero() == a);

        CHECK((a * b) * c == a * (b * c));
        CHECK(a * Scalar::one() == a);
        CHECK(Scalar::one() * a == a);
        CHECK(a * Scalar::zero() == Scalar::zero());
        CHECK(Scalar::zero() * a == Scalar::zero());

        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("natural order agrees with the additive characterization") {
    std::mt19937 rng(2);
    for (int i = 0; i < 250; ++i) {
        Scalar a = testutil::random_scalar(rng);
        Scalar b = testutil::random_scalar(rng);
        CHECK((a <= b) == (a + b == b));
    }
    CHECK(Scalar::zero() <= Scalar::of(-100));
    CHECK(min(Scalar::of(3), Scalar::zero()).is_bottom());
}

TEST_CASE("inversion maps bottom to top") {
    CHECK(UpperScalar::inverse(Scalar::of(5)) == UpperScalar(Rational(-5)));
    CHECK(UpperScalar::inverse(Scalar::zero()).is_top());
}

TEST_CASE("min-plus product conventions") {
    UpperScalar top = UpperScalar::top();
    UpperScalar fin(Rational(2));
    CHECK(minplus_mul(top, Scalar::of(7)).is_top());
    CHECK(minplus_mul(top, Scalar::bottom()).is_top());  // division by zero is unconstrained
    CHECK(minplus_mul(fin, Scalar::bottom()).is_bottom());
    CHECK(minplus_mul(fin, Scalar::of(3)) == UpperScalar(Rational(5)));
    CHECK(min(top, fin) == fin);
    CHECK(min(UpperScalar::bottom(), top).is_bottom());
}

TEST_CASE("clamp replaces only top") {
    CHECK(UpperScalar::top().clamp(Scalar::of(99)) == Scalar::of(99));
    CHECK(UpperScalar::bottom().clamp(Scalar::of(99)).is_bottom());
    CHECK(UpperScalar(Rational(4)).clamp(Scalar::of(99)) == Scalar::of(4));
}

}  // TEST_SUITE
