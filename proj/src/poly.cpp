#include "hopfgraph/poly.hpp"

#include <stdexcept>

namespace hopfgraph {

namespace {

// Shared pretty-printer: renders coeff * name^power chains like "k^3 - 3*k^2 + 2*k".
void append_term(std::string& out, const Rational& coeff, const std::string& monomial) {
    bool negative = coeff < Rational(0);
    Rational mag = negative ? -coeff : coeff;
    if (out.empty()) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    if (monomial.empty()) {
        out += mag.str();
    } else {
        if (!(mag == Rational(1))) {
            out += mag.str();
            out += "*";
        }
        out += monomial;
    }
}

std::string power_str(const std::string& var, int p) {
    if (p == 0) return "";
    if (p == 1) return var;
    return var + "^" + std::to_string(p);
}

}  // namespace

PolyInK::PolyInK(const Rational& constant) {
    if (!constant.is_zero()) coeffs_.push_back(constant);
}

PolyInK::PolyInK(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyInK PolyInK::variable() { return monomial(1, Rational(1)); }

PolyInK PolyInK::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    PolyInK p;
    if (!coeff.is_zero()) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = coeff;
    }
    return p;
}

PolyInK PolyInK::binomial_poly(int ell) {
    if (ell < 0) throw std::invalid_argument("negative binomial index");
    PolyInK p(Rational(1));
    for (int i = 0; i < ell; ++i) {
        p *= (variable() - PolyInK(Rational(i)));
    }
    p *= Rational(1) / factorial(ell);
    return p;
}

PolyInK PolyInK::interpolate(const std::vector<Rational>& values) {
    if (values.empty()) throw std::invalid_argument("interpolate() needs at least one value");
    // Newton forward differences at integer nodes 0..n.
    std::vector<Rational> diffs = values;
    PolyInK result;
    for (size_t i = 0; i < values.size(); ++i) {
        result += diffs[0] * binomial_poly(static_cast<int>(i));
        for (size_t j = 0; j + i + 1 < values.size(); ++j) diffs[j] = diffs[j + 1] - diffs[j];
    }
    return result;
}

Rational PolyInK::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

Rational PolyInK::eval(const Rational& k) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
    return acc;
}

PolyInK& PolyInK::operator+=(const PolyInK& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

PolyInK& PolyInK::operator-=(const PolyInK& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

PolyInK& PolyInK::operator*=(const PolyInK& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

PolyInK& PolyInK::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

void PolyInK::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string PolyInK::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs_[i].is_zero()) continue;
        append_term(out, coeffs_[i], power_str("k", i));
    }
    return out;
}

PolyInK operator+(PolyInK lhs, const PolyInK& rhs) { return lhs += rhs; }
PolyInK operator-(PolyInK lhs, const PolyInK& rhs) { return lhs -= rhs; }
PolyInK operator*(PolyInK lhs, const PolyInK& rhs) { return lhs *= rhs; }
PolyInK operator*(const Rational& scalar, PolyInK p) { return p *= scalar; }

BivarPoly BivarPoly::monomial(int xpow, int ypow, const Rational& coeff) {
    if (xpow < 0 || ypow < 0) throw std::invalid_argument("negative exponent");
    BivarPoly p;
    p.add_term(xpow, ypow, coeff);
    return p;
}

void BivarPoly::add_term(int xpow, int ypow, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto key = Exponents{xpow, ypow};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational BivarPoly::coeff(int xpow, int ypow) const {
    auto it = terms_.find({xpow, ypow});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BivarPoly::eval(const Rational& at_x, const Rational& at_y) const {
    Rational acc(0);
    for (const auto& [exps, coeff] : terms_) {
        acc += coeff * at_x.pow(exps.first) * at_y.pow(exps.second);
    }
    return acc;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps.first, exps.second, coeff);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
    for (const auto& [exps, coeff] : rhs.terms_) add_term(exps.first, exps.second, -coeff);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const BivarPoly& rhs) {
    BivarPoly out;
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : rhs.terms_) {
            out.add_term(a.first + b.first, a.second + b.second, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= scalar;
    return *this;
}

std::string BivarPoly::str() const {
    if (is_zero()) return "0";
    // Highest x first, then highest y, matching the usual Tutte layout.
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        std::string mono = power_str("x", exps.first);
        std::string ypart = power_str("y", exps.second);
        if (!mono.empty() && !ypart.empty()) mono += "*";
        mono += ypart;
        append_term(out, coeff, mono);
    }
    return out;
}

BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
BivarPoly operator*(BivarPoly lhs, const BivarPoly& rhs) { return lhs *= rhs; }
BivarPoly operator*(const Rational& scalar, BivarPoly p) { return p *= scalar; }

}  // namespace hopfgraph
