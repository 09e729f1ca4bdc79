#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfgraph/rational.hpp"

namespace hopfgraph {

/// Truncated power series sum c_i x^i with exact rational coefficients;
/// all arithmetic truncates at the construction-time degree bound.
class Series {
public:
    explicit Series(int max_degree);

    static Series one(int max_degree);
    static Series exp_cx(const Rational& c, int max_degree);
    /// (1+x)^k; negative k expands through the geometric series for 1/(1+x).
    static Series one_plus_x_pow(int64_t k, int max_degree);

    int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int i) const;
    /// n! * [x^n], the exponential-generating-function reading.
    Rational egf_coeff(int n) const;

    Series& operator*=(const Series& rhs);
    Series& operator+=(const Series& rhs);
    Series pow(int64_t exponent) const;  // exponent >= 0

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

Series operator*(Series lhs, const Series& rhs);
Series operator+(Series lhs, const Series& rhs);

// --- reciprocity-family identity checks --------------------------------------

/// Both sides of (zeta^n * xi_1)(K_m) == (zeta^m * xi_1)(K_n), each computed
/// by direct convolution. n, m <= 9.
std::pair<Rational, Rational> reciprocity_check(int n, int m);

/// The closed form sum over j of C(m,j) C(n,j) j!.
Rational reciprocity_closed_form(int n, int m);

/// Signed variant: (zeta^n * xi_{-1})(K_m) == (-1)^(n+m) (zeta^m * xi_{-1})(K_n).
bool signed_reciprocity_check(int n, int m);

/// Derangement and arrangement counts by recurrence (the oracle side).
std::vector<int64_t> derangement_numbers(int n_max);  // D_0..D_n
std::vector<int64_t> arrangement_numbers(int n_max);  // A_0..A_n

/// (zeta^{-1} * xi_1)(K_n) == (-1)^n D_n and (zeta^{-1} * xi_{-1})(K_n) ==
/// (-1)^n A_n for all n <= n_max (n_max <= 8).
bool derangement_check(int n_max);

/// n! [x^n] of e^(c x) (1+x)^k equals (zeta^k * xi_c)(K_n) for n <= n_max.
bool egf_check(const Rational& c, int64_t k, int n_max);

/// alpha^{-1}(K_n): the matching-sum closed form.
int64_t a009775_closed_form(int n);

/// Published values of the sequence, starting at n = 1.
const std::vector<int64_t>& a009775_reference_values();

/// Flats-formula path for n = 1..n_max (n_max <= 8) against both the closed
/// form and the reference list; closed form alone checked to n = 12.
bool a009775_check(int n_max);

}  // namespace hopfgraph
