#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfgraph/character.hpp"
#include "hopfgraph/multigraph.hpp"
#include "hopfgraph/poly.hpp"
#include "hopfgraph/rational.hpp"

namespace hopfgraph {

/// Ordered list of positive parts; the empty composition has weight 0.
using Composition = std::vector<int>;

int composition_weight(const Composition& alpha);
std::string composition_str(const Composition& alpha);  // "(2,1)", "()"

/// All compositions of n, by first part then recursively (2^(n-1) of them).
std::vector<Composition> compositions_of(int n);

/// Element of QSym in the monomial basis; no zero coefficients stored.
class QSymElement {
public:
    QSymElement() = default;
    static QSymElement monomial(const Composition& alpha, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Composition, Rational>& terms() const { return terms_; }
    Rational coefficient(const Composition& alpha) const;
    void add_term(const Composition& alpha, const Rational& coeff);

    QSymElement& operator+=(const QSymElement& rhs);
    QSymElement& operator*=(const Rational& scalar);

    friend bool operator==(const QSymElement&, const QSymElement&) = default;

private:
    std::map<Composition, Rational> terms_;
};

/// zeta_alpha(G): sum over ordered vertex decompositions (V_1..V_l) with
/// |V_i| = alpha_i of the product of zeta(G|_{V_i}). Weight must match n(G).
Rational zeta_alpha(const Character& zeta, const Multigraph& g, const Composition& alpha);

/// The terminal-object map: Psi(G) = sum over alpha of zeta_alpha(G) M_alpha.
QSymElement psi(const Multigraph& g, const Character& zeta);

/// Principal specialization Pi: M_alpha -> C(k, length(alpha)), extended linearly.
PolyInK pi_specialization(const QSymElement& q);

/// Truncated expansion of M_alpha in var_count commuting variables: map from
/// exponent vectors to coefficients. Faithful for quasisymmetric elements of
/// length <= var_count; this is the product oracle.
using MonomialExpansion = std::map<std::vector<int>, Rational>;
MonomialExpansion expand_monomial_qsym(const Composition& alpha, int var_count);

/// M_alpha * M_beta recovered from truncated polynomial expansion.
/// var_count = 0 chooses length(alpha) + length(beta); smaller values throw.
QSymElement m_product(const Composition& alpha, const Composition& beta, int var_count = 0);

/// Deconcatenation coproduct: the l+1 prefix/suffix splits of alpha.
std::vector<std::pair<Composition, Composition>> m_coproduct(const Composition& alpha);

}  // namespace hopfgraph
