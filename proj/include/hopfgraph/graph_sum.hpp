#pragma once

#include <map>

#include "hopfgraph/multigraph.hpp"
#include "hopfgraph/rational.hpp"

namespace hopfgraph {

/// Finite linear combination of isomorphism classes with exact rational
/// coefficients; zero coefficients are never stored. Product is the bilinear
/// extension of disjoint union, with the empty graph K_0 as unit.
class GraphSum {
public:
    GraphSum() = default;  // zero

    static GraphSum basis(const Multigraph& g);
    static GraphSum basis(const CanonicalKey& key);
    static GraphSum unit();  // K_0

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<CanonicalKey, Rational>& terms() const { return terms_; }
    Rational coefficient(const CanonicalKey& key) const;

    void add_term(const CanonicalKey& key, const Rational& coeff);

    /// Homogeneous part spanned by keys with exactly `degree` vertices.
    GraphSum component(int degree) const;

    GraphSum& operator+=(const GraphSum& rhs);
    GraphSum& operator-=(const GraphSum& rhs);
    GraphSum& operator*=(const GraphSum& rhs);
    GraphSum& operator*=(const Rational& scalar);

    friend bool operator==(const GraphSum&, const GraphSum&) = default;

private:
    std::map<CanonicalKey, Rational> terms_;
};

GraphSum operator+(GraphSum lhs, const GraphSum& rhs);
GraphSum operator-(GraphSum lhs, const GraphSum& rhs);
GraphSum operator*(GraphSum lhs, const GraphSum& rhs);
GraphSum operator*(const Rational& scalar, GraphSum s);

}  // namespace hopfgraph
