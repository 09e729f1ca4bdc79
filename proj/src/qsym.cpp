#include "hopfgraph/qsym.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hopfgraph {

int composition_weight(const Composition& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

std::string composition_str(const Composition& alpha) {
    std::string out = "(";
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(alpha[i]);
    }
    return out + ")";
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of(): negative weight");
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    for (int first = 1; first <= n; ++first) {
        for (const Composition& rest : compositions_of(n - first)) {
            Composition alpha{first};
            alpha.insert(alpha.end(), rest.begin(), rest.end());
            out.push_back(std::move(alpha));
        }
    }
    return out;
}

QSymElement QSymElement::monomial(const Composition& alpha, const Rational& coeff) {
    QSymElement q;
    q.add_term(alpha, coeff);
    return q;
}

Rational QSymElement::coefficient(const Composition& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QSymElement::add_term(const Composition& alpha, const Rational& coeff) {
    if (coeff.is_zero()) return;
    for (int part : alpha) {
        if (part < 1) throw std::invalid_argument("composition parts must be positive");
    }
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        terms_.emplace(alpha, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QSymElement& QSymElement::operator+=(const QSymElement& rhs) {
    for (const auto& [alpha, coeff] : rhs.terms_) add_term(alpha, coeff);
    return *this;
}

QSymElement& QSymElement::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, coeff] : terms_) coeff *= scalar;
    return *this;
}

namespace {

// Sum over ordered decompositions of `remaining` into blocks of the given sizes.
Rational zeta_alpha_recurse(const Character& zeta, const Multigraph& g, uint64_t remaining,
                            const Composition& alpha, size_t at) {
    if (at == alpha.size()) return Rational(1);
    Rational acc(0);
    int want = alpha[at];
    for (uint64_t sub = remaining;; sub = (sub - 1) & remaining) {
        if (std::popcount(sub) == want) {
            Rational factor = zeta(g.induced(sub));
            if (!factor.is_zero()) {
                acc += factor * zeta_alpha_recurse(zeta, g, remaining & ~sub, alpha, at + 1);
            }
        }
        if (sub == 0) break;
    }
    return acc;
}

}  // namespace

Rational zeta_alpha(const Character& zeta, const Multigraph& g, const Composition& alpha) {
    if (composition_weight(alpha) != g.vertex_count()) {
        throw std::invalid_argument("zeta_alpha(): composition weight must equal n(G)");
    }
    int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("zeta_alpha(): graph too large");
    return zeta_alpha_recurse(zeta, g, (uint64_t(1) << n) - 1, alpha, 0);
}

QSymElement psi(const Multigraph& g, const Character& zeta) {
    QSymElement out;
    for (const Composition& alpha : compositions_of(g.vertex_count())) {
        out.add_term(alpha, zeta_alpha(zeta, g, alpha));
    }
    return out;
}

PolyInK pi_specialization(const QSymElement& q) {
    PolyInK out;
    for (const auto& [alpha, coeff] : q.terms()) {
        out += coeff * PolyInK::binomial_poly(static_cast<int>(alpha.size()));
    }
    return out;
}

namespace {

void expand_recurse(const Composition& alpha, int var_count, size_t at, int min_var,
                    std::vector<int>& exponents, MonomialExpansion& out) {
    if (at == alpha.size()) {
        auto [it, fresh] = out.emplace(exponents, Rational(1));
        if (!fresh) it->second += Rational(1);
        return;
    }
    for (int var = min_var; var < var_count; ++var) {
        exponents[var] = alpha[at];
        expand_recurse(alpha, var_count, at + 1, var + 1, exponents, out);
        exponents[var] = 0;
    }
}

}  // namespace

MonomialExpansion expand_monomial_qsym(const Composition& alpha, int var_count) {
    if (var_count < 0) throw std::invalid_argument("negative variable count");
    MonomialExpansion out;
    std::vector<int> exponents(var_count, 0);
    expand_recurse(alpha, var_count, 0, 0, exponents, out);
    return out;
}

QSymElement m_product(const Composition& alpha, const Composition& beta, int var_count) {
    int needed = static_cast<int>(alpha.size() + beta.size());
    if (var_count == 0) var_count = needed;
    if (var_count < needed) {
        throw std::invalid_argument("m_product(): need at least len(alpha)+len(beta) variables");
    }
    MonomialExpansion ea = expand_monomial_qsym(alpha, var_count);
    MonomialExpansion eb = expand_monomial_qsym(beta, var_count);
    MonomialExpansion product;
    for (const auto& [ma, ca] : ea) {
        for (const auto& [mb, cb] : eb) {
            std::vector<int> exps(var_count);
            for (int i = 0; i < var_count; ++i) exps[i] = ma[i] + mb[i];
            auto [it, fresh] = product.emplace(std::move(exps), ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    // A quasisymmetric element is determined by the coefficients of monomials
    // supported on the first len(gamma) variables.
    QSymElement out;
    for (const Composition& gamma : compositions_of(composition_weight(alpha) +
                                                    composition_weight(beta))) {
        if (static_cast<int>(gamma.size()) > var_count) continue;
        std::vector<int> exps(var_count, 0);
        std::copy(gamma.begin(), gamma.end(), exps.begin());
        auto it = product.find(exps);
        if (it != product.end()) out.add_term(gamma, it->second);
    }
    return out;
}

std::vector<std::pair<Composition, Composition>> m_coproduct(const Composition& alpha) {
    std::vector<std::pair<Composition, Composition>> out;
    for (size_t cut = 0; cut <= alpha.size(); ++cut) {
        out.emplace_back(Composition(alpha.begin(), alpha.begin() + cut),
                         Composition(alpha.begin() + cut, alpha.end()));
    }
    return out;
}

}  // namespace hopfgraph
