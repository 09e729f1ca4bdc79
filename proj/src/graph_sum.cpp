#include "hopfgraph/graph_sum.hpp"

namespace hopfgraph {

GraphSum GraphSum::basis(const Multigraph& g) { return basis(canonical_key(g)); }

GraphSum GraphSum::basis(const CanonicalKey& key) {
    GraphSum s;
    s.terms_.emplace(key, Rational(1));
    return s;
}

GraphSum GraphSum::unit() { return basis(Multigraph()); }

Rational GraphSum::coefficient(const CanonicalKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GraphSum::add_term(const CanonicalKey& key, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GraphSum GraphSum::component(int degree) const {
    GraphSum out;
    for (const auto& [key, coeff] : terms_) {
        if (key.graph_vertex_count() == degree) out.terms_.emplace(key, coeff);
    }
    return out;
}

GraphSum& GraphSum::operator+=(const GraphSum& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, coeff);
    return *this;
}

GraphSum& GraphSum::operator-=(const GraphSum& rhs) {
    for (const auto& [key, coeff] : rhs.terms_) add_term(key, -coeff);
    return *this;
}

GraphSum& GraphSum::operator*=(const GraphSum& rhs) {
    GraphSum out;
    for (const auto& [ka, ca] : terms_) {
        Multigraph ga = ka.to_multigraph();
        for (const auto& [kb, cb] : rhs.terms_) {
            out.add_term(canonical_key(disjoint_union(ga, kb.to_multigraph())), ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

GraphSum& GraphSum::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= scalar;
    return *this;
}

GraphSum operator+(GraphSum lhs, const GraphSum& rhs) { return lhs += rhs; }
GraphSum operator-(GraphSum lhs, const GraphSum& rhs) { return lhs -= rhs; }
GraphSum operator*(GraphSum lhs, const GraphSum& rhs) { return lhs *= rhs; }
GraphSum operator*(const Rational& scalar, GraphSum s) { return s *= scalar; }

}  // namespace hopfgraph
