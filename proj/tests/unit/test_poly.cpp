#include <doctest.h>

#include "hopfgraph/poly.hpp"

using namespace hopfgraph;

TEST_CASE("univariate arithmetic and evaluation") {
    PolyInK k = PolyInK::variable();
    PolyInK p = k * k - Rational(3) * k + PolyInK(Rational(2));
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(1)) == Rational(0));
    CHECK(p.eval(Rational(5)) == Rational(12));
    CHECK(p.eval(Rational(1, 2)) == Rational(3, 4));
    CHECK((p - p).is_zero());
    CHECK(p.coeff(5) == Rational(0));
}

TEST_CASE("binomial polynomials") {
    CHECK(PolyInK::binomial_poly(0) == PolyInK(Rational(1)));
    CHECK(PolyInK::binomial_poly(1) == PolyInK::variable());
    PolyInK choose2 = PolyInK::binomial_poly(2);
    CHECK(choose2.eval(Rational(6)) == Rational(15));
    CHECK(choose2.eval(Rational(-1)) == Rational(1));  // C(-1,2) as a polynomial
    CHECK(choose2.coeff(2) == Rational(1, 2));
}

TEST_CASE("interpolation through 0..n") {
    // zeta^k(K_3) values 0,0,0,6 interpolate to k(k-1)(k-2)
    PolyInK p = PolyInK::interpolate({Rational(0), Rational(0), Rational(0), Rational(6)});
    PolyInK k = PolyInK::variable();
    CHECK(p == k * (k - PolyInK(Rational(1))) * (k - PolyInK(Rational(2))));
    CHECK(p.eval(Rational(-1)) == Rational(-6));

    PolyInK constant = PolyInK::interpolate({Rational(7)});
    CHECK(constant == PolyInK(Rational(7)));
}

TEST_CASE("univariate rendering") {
    PolyInK k = PolyInK::variable();
    PolyInK p = k * k * k - Rational(3) * (k * k) + Rational(2) * k;
    CHECK(p.str() == "k^3 - 3*k^2 + 2*k");
    CHECK(PolyInK().str() == "0");
}

TEST_CASE("bivariate arithmetic") {
    BivarPoly t = BivarPoly::x() * BivarPoly::x() + BivarPoly::x() + BivarPoly::y();
    CHECK(t.eval(Rational(3), Rational(2)) == Rational(14));
    CHECK(t.eval(Rational(1), Rational(1)) == Rational(3));
    CHECK(t.coeff(2, 0) == Rational(1));
    CHECK(t.coeff(1, 1) == Rational(0));
    CHECK(t.str() == "x^2 + x + y");

    BivarPoly zero = t - t;
    CHECK(zero.is_zero());
    CHECK((t * BivarPoly::one()) == t);
    CHECK((Rational(2) * t).eval(Rational(1), Rational(0)) == Rational(4));
}

TEST_CASE("bivariate products expand correctly") {
    BivarPoly xm1 = BivarPoly::x() - BivarPoly::one();
    BivarPoly sq = xm1 * xm1;
    CHECK(sq.coeff(2, 0) == Rational(1));
    CHECK(sq.coeff(1, 0) == Rational(-2));
    CHECK(sq.coeff(0, 0) == Rational(1));
    CHECK(sq.eval(Rational(1, 2), Rational(9)) == Rational(1, 4));
}
