#include "hopfgraph/reciprocity.hpp"

#include <stdexcept>

#include "hopfgraph/character.hpp"
#include "hopfgraph/multigraph.hpp"

namespace hopfgraph {

Series::Series(int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("Series: negative truncation degree");
    coeffs_.assign(max_degree + 1, Rational(0));
}

Series Series::one(int max_degree) {
    Series s(max_degree);
    s.coeffs_[0] = Rational(1);
    return s;
}

Series Series::exp_cx(const Rational& c, int max_degree) {
    Series s(max_degree);
    Rational term(1);
    for (int i = 0; i <= max_degree; ++i) {
        s.coeffs_[i] = term;
        term = term * c / Rational(i + 1);
    }
    return s;
}

Series Series::one_plus_x_pow(int64_t k, int max_degree) {
    if (k >= 0) {
        Series s(max_degree);
        for (int i = 0; i <= max_degree; ++i) s.coeffs_[i] = binomial(k, i);
        return s;
    }
    // 1/(1+x) = sum (-x)^i, then raise to -k.
    Series inv(max_degree);
    for (int i = 0; i <= max_degree; ++i) inv.coeffs_[i] = Rational(-1).pow(i);
    return inv.pow(-k);
}

const Rational& Series::coeff(int i) const {
    if (i < 0 || i > max_degree()) throw std::out_of_range("Series::coeff out of range");
    return coeffs_[i];
}

Rational Series::egf_coeff(int n) const { return coeff(n) * factorial(n); }

Series& Series::operator*=(const Series& rhs) {
    int bound = std::min(max_degree(), rhs.max_degree());
    std::vector<Rational> out(bound + 1, Rational(0));
    for (int i = 0; i <= bound; ++i) {
        for (int j = 0; i + j <= bound && j <= rhs.max_degree(); ++j) {
            if (i <= max_degree()) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

Series& Series::operator+=(const Series& rhs) {
    int bound = std::min(max_degree(), rhs.max_degree());
    coeffs_.resize(bound + 1);
    for (int i = 0; i <= bound; ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Series Series::pow(int64_t exponent) const {
    if (exponent < 0) throw std::invalid_argument("Series::pow: negative exponent");
    Series acc = Series::one(max_degree());
    for (int64_t i = 0; i < exponent; ++i) acc *= *this;
    return acc;
}

Series operator*(Series lhs, const Series& rhs) { return lhs *= rhs; }
Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }

namespace {

Rational zeta_power_conv_xi(int power, const Rational& c, int m) {
    return convolve(hopfgraph::power(zeta_char(), power), xi_char(c))(Multigraph::complete(m));
}

}  // namespace

std::pair<Rational, Rational> reciprocity_check(int n, int m) {
    if (n < 0 || m < 0 || n > 9 || m > 9) {
        throw std::invalid_argument("reciprocity_check(): n, m must be in [0, 9]");
    }
    return {zeta_power_conv_xi(n, Rational(1), m), zeta_power_conv_xi(m, Rational(1), n)};
}

Rational reciprocity_closed_form(int n, int m) {
    Rational acc(0);
    for (int j = 0; j <= std::min(n, m); ++j) {
        acc += binomial(m, j) * binomial(n, j) * factorial(j);
    }
    return acc;
}

bool signed_reciprocity_check(int n, int m) {
    Rational lhs = zeta_power_conv_xi(n, Rational(-1), m);
    Rational rhs = Rational(-1).pow(n + m) * zeta_power_conv_xi(m, Rational(-1), n);
    return lhs == rhs;
}

std::vector<int64_t> derangement_numbers(int n_max) {
    std::vector<int64_t> d{1};
    if (n_max >= 1) d.push_back(0);
    for (int n = 2; n <= n_max; ++n) d.push_back((n - 1) * (d[n - 1] + d[n - 2]));
    return d;
}

std::vector<int64_t> arrangement_numbers(int n_max) {
    std::vector<int64_t> a{1};
    for (int n = 1; n <= n_max; ++n) a.push_back(n * a[n - 1] + 1);
    return a;
}

bool derangement_check(int n_max) {
    if (n_max < 0 || n_max > 8) throw std::invalid_argument("derangement_check(): n_max in [0, 8]");
    auto d = derangement_numbers(n_max);
    auto a = arrangement_numbers(n_max);
    for (int n = 0; n <= n_max; ++n) {
        Rational sign = Rational(-1).pow(n);
        if (!(zeta_power_conv_xi(-1, Rational(1), n) == sign * Rational(d[n]))) return false;
        if (!(zeta_power_conv_xi(-1, Rational(-1), n) == sign * Rational(a[n]))) return false;
    }
    return true;
}

bool egf_check(const Rational& c, int64_t k, int n_max) {
    if (n_max < 0 || n_max > 8) throw std::invalid_argument("egf_check(): n_max in [0, 8]");
    Series series = Series::exp_cx(c, n_max) * Series::one_plus_x_pow(k, n_max);
    for (int n = 0; n <= n_max; ++n) {
        if (!(series.egf_coeff(n) == zeta_power_conv_xi(static_cast<int>(k), c, n))) return false;
    }
    return true;
}

int64_t a009775_closed_form(int n) {
    Rational acc(0);
    for (int m = 0; 2 * m <= n; ++m) {
        Rational matchings = factorial(n) / (Rational(2).pow(m) * factorial(n - 2 * m) * factorial(m));
        acc += Rational(-1).pow(n - m) * matchings * factorial(n - m);
    }
    return acc.as_int64();
}

const std::vector<int64_t>& a009775_reference_values() {
    static const std::vector<int64_t> values{-1,   1,     0,      -6,     30,  -90,
                                             0,    2520,  -22680, 113400, 0,   -7484400};
    return values;
}

bool a009775_check(int n_max) {
    if (n_max < 1 || n_max > 8) throw std::invalid_argument("a009775_check(): n_max in [1, 8]");
    const auto& reference = a009775_reference_values();
    auto acyclic = [](const Multigraph& g) {
        return !g.has_loop() && g.edge_count() == g.rank();
    };
    for (int n = 1; n <= n_max; ++n) {
        Rational via_flats = inverse_via_flats(acyclic, Multigraph::complete(n));
        int64_t closed = a009775_closed_form(n);
        if (!(via_flats == Rational(closed))) return false;
        if (closed != reference[n - 1]) return false;
    }
    for (int n = 1; n <= 12; ++n) {
        if (a009775_closed_form(n) != reference[n - 1]) return false;
    }
    return true;
}

}  // namespace hopfgraph
