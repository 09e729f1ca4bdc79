#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfgraph/rational.hpp"

namespace hopfgraph {

/// Dense univariate polynomial in k over Rational. Trailing zeros trimmed;
/// the zero polynomial has no coefficients and degree -1.
class PolyInK {
public:
    PolyInK() = default;
    explicit PolyInK(const Rational& constant);
    explicit PolyInK(std::vector<Rational> coeffs);

    static PolyInK variable();
    static PolyInK monomial(int degree, const Rational& coeff);
    /// C(k, ell) as a polynomial: k(k-1)...(k-ell+1)/ell!.
    static PolyInK binomial_poly(int ell);
    /// Unique polynomial of degree <= n through (i, values[i]) for i = 0..n.
    static PolyInK interpolate(const std::vector<Rational>& values_at_0_to_n);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& k) const;

    PolyInK& operator+=(const PolyInK& rhs);
    PolyInK& operator-=(const PolyInK& rhs);
    PolyInK& operator*=(const PolyInK& rhs);
    PolyInK& operator*=(const Rational& scalar);

    std::string str() const;  // e.g. "k^3 - 3*k^2 + 2*k"

    friend bool operator==(const PolyInK&, const PolyInK&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

PolyInK operator+(PolyInK lhs, const PolyInK& rhs);
PolyInK operator-(PolyInK lhs, const PolyInK& rhs);
PolyInK operator*(PolyInK lhs, const PolyInK& rhs);
PolyInK operator*(const Rational& scalar, PolyInK p);

/// Sparse bivariate polynomial in x, y over Rational; no zero terms stored.
class BivarPoly {
public:
    using Exponents = std::pair<int, int>;  // (x power, y power)

    BivarPoly() = default;

    static BivarPoly zero() { return {}; }
    static BivarPoly one() { return monomial(0, 0, Rational(1)); }
    static BivarPoly x() { return monomial(1, 0, Rational(1)); }
    static BivarPoly y() { return monomial(0, 1, Rational(1)); }
    static BivarPoly monomial(int xpow, int ypow, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coeff(int xpow, int ypow) const;

    Rational eval(const Rational& at_x, const Rational& at_y) const;

    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);
    BivarPoly& operator*=(const BivarPoly& rhs);
    BivarPoly& operator*=(const Rational& scalar);

    std::string str() const;  // e.g. "x^2 + x + y"

    friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
    void add_term(int xpow, int ypow, const Rational& coeff);
    std::map<Exponents, Rational> terms_;
};

BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs);
BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs);
BivarPoly operator*(BivarPoly lhs, const BivarPoly& rhs);
BivarPoly operator*(const Rational& scalar, BivarPoly p);

}  // namespace hopfgraph
