#include <doctest.h>

#include "hopfgraph/character.hpp"
#include "hopfgraph/reciprocity.hpp"
#include "hopfgraph/verify.hpp"

using namespace hopfgraph;

TEST_CASE("series building blocks") {
    Series e2 = Series::exp_cx(Rational(2), 5);
    CHECK(e2.coeff(0) == Rational(1));
    CHECK(e2.coeff(3) == Rational(4, 3));  // 2^3/3!
    CHECK(e2.egf_coeff(3) == Rational(8));

    Series binom = Series::one_plus_x_pow(3, 5);
    CHECK(binom.coeff(2) == Rational(3));
    CHECK(binom.coeff(4) == Rational(0));

    Series inv = Series::one_plus_x_pow(-1, 5);
    for (int i = 0; i <= 5; ++i) CHECK(inv.coeff(i) == Rational(-1).pow(i));
    // (1+x)^{-1} * (1+x) = 1 up to truncation
    CHECK(inv * Series::one_plus_x_pow(1, 5) == Series::one(5));
    CHECK(Series::one_plus_x_pow(-2, 4) * Series::one_plus_x_pow(2, 4) == Series::one(4));
}

TEST_CASE("reciprocity between complete graphs") {
    auto [lhs, rhs] = reciprocity_check(2, 3);
    CHECK(lhs == Rational(13));  // 1 + C(3,1)C(2,1) + C(3,2)C(2,2)·2! = 1+6+6
    CHECK(rhs == Rational(13));
    CHECK(reciprocity_closed_form(2, 3) == Rational(13));

    auto [l05, r05] = reciprocity_check(0, 5);
    CHECK(l05 == Rational(1));
    CHECK(r05 == Rational(1));

    for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            auto [a, b] = reciprocity_check(n, m);
            CHECK(a == b);
            CHECK(a == reciprocity_closed_form(n, m));
            CHECK(signed_reciprocity_check(n, m));
        }
    }
}

TEST_CASE("derangement and arrangement recurrences") {
    auto d = derangement_numbers(8);
    CHECK(d == std::vector<int64_t>{1, 0, 1, 2, 9, 44, 265, 1854, 14833});
    auto a = arrangement_numbers(5);
    CHECK(a == std::vector<int64_t>{1, 2, 5, 16, 65, 326});

    // the signed identities at small n, straight from the convolution
    Character zeta_inv_conv_xi1 = convolve(power(zeta_char(), -1), xi_char(Rational(1)));
    CHECK(zeta_inv_conv_xi1(Multigraph::complete(4)) == Rational(9));
    Character zeta_inv_conv_xim1 = convolve(power(zeta_char(), -1), xi_char(Rational(-1)));
    CHECK(zeta_inv_conv_xim1(Multigraph::complete(3)) == Rational(-16));

    CHECK(derangement_check(5));
}

TEST_CASE("EGF prefix checks") {
    CHECK(egf_check(Rational(1), 0, 5));   // xi_1(K_n) = 1 = n![x^n] e^x
    CHECK(egf_check(Rational(1), -1, 5));  // derangement EGF relationship
    CHECK(egf_check(Rational(2), 2, 4));
    CHECK(egf_check(Rational(-1), 1, 4));

    // cross-consistency: n![x^n] e^x (1+x)^{-1} = (-1)^n D_n
    Series s = Series::exp_cx(Rational(1), 6) * Series::one_plus_x_pow(-1, 6);
    auto d = derangement_numbers(6);
    for (int n = 0; n <= 6; ++n) {
        CHECK(s.egf_coeff(n) == Rational(-1).pow(n) * Rational(d[n]));
    }
}

TEST_CASE("A009775 values") {
    CHECK(a009775_closed_form(2) == 1);
    CHECK(a009775_closed_form(5) == 30);
    CHECK(a009775_closed_form(7) == 0);
    CHECK(a009775_closed_form(12) == -7484400);
    CHECK(a009775_check(6));
}

TEST_CASE("xi characters form a subgroup isomorphic to the scalars") {
    const std::vector<Rational> cs{Rational(-2), Rational(-1), Rational(1, 2), Rational(1),
                                   Rational(3)};
    for (const Multigraph& g : hopfgraph::simple_graph_corpus(5)) {
        for (const Rational& c : cs) {
            for (const Rational& d : cs) {
                CHECK(convolve(xi_char(c), xi_char(d))(g) == xi_char(c + d)(g));
            }
            for (int64_t k = -3; k <= 5; ++k) {
                CHECK(convolution_power_value(xi_char(c), k, g) == xi_char(c * Rational(k))(g));
            }
            CHECK(convolution_power_value(xi_char(c), -1, g) == xi_char(-c)(g));
            CHECK(bar(xi_char(c))(g) == xi_char(-c)(g));
        }
    }
}
