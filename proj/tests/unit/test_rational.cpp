#include <doctest.h>

#include <stdexcept>

#include "hopfgraph/rational.hpp"

using hopfgraph::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -3).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("ordering compares cross-multiplied") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 1) > Rational(13, 2));
}

TEST_CASE("pow handles negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(-1).pow(7) == Rational(-1));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("parse and str round trip") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational(5, 3).str() == "5/3");
    CHECK(Rational(-6, 3).str() == "-2");
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
}

TEST_CASE("integer access") {
    CHECK(Rational(12, 4).as_int64() == 3);
    CHECK_THROWS_AS(Rational(1, 2).as_int64(), std::domain_error);
}

TEST_CASE("overflow is loud, not silent") {
    Rational big = hopfgraph::factorial(20);  // still fits
    CHECK(big == Rational(2432902008176640000));
    CHECK_THROWS_AS(big * big * big, std::overflow_error);
    CHECK_THROWS_AS(hopfgraph::factorial(30), std::overflow_error);
}

TEST_CASE("factorial and binomial helpers") {
    CHECK(hopfgraph::factorial(0) == Rational(1));
    CHECK(hopfgraph::factorial(5) == Rational(120));
    CHECK(hopfgraph::binomial(7, 3) == Rational(35));
    CHECK(hopfgraph::binomial(7, 0) == Rational(1));
    CHECK(hopfgraph::binomial(7, 9) == Rational(0));
    CHECK(hopfgraph::binomial(7, -1) == Rational(0));
}
