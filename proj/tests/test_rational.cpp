#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rectwalg/rational.hpp"

using namespace rectwalg;

TEST_CASE("normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(7, 2) - Rational(7, 2) == Rational(0));
    CHECK(Rational(1) / Rational(-3) == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(-9, 2));
    CHECK(Rational(2, 6) <= Rational(1, 3));
}

TEST_CASE("frac") {
    CHECK(Rational(7, 2).frac() == Rational(1, 2));
    CHECK(Rational(-7, 2).frac() == Rational(1, 2));
    CHECK(Rational(-3).frac() == Rational(0));
    CHECK(Rational(5, 3).frac() == Rational(2, 3));
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    // near-limit values that reduce back are fine
    CHECK(Rational(INT64_MAX, INT64_MAX) == Rational(1));
}

TEST_CASE("str") {
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK(Rational(0).str() == "0");
}
