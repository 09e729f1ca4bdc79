#include "hopfgraph/hopf.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "hopfgraph/matroid.hpp"

namespace hopfgraph {

std::vector<SweedlerTerm> coproduct(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 63) throw std::invalid_argument("coproduct(): more than 63 vertices");
    std::map<std::pair<CanonicalKey, CanonicalKey>, int64_t> collected;
    uint64_t full = (uint64_t(1) << n) - 1;
    for (uint64_t t = 0;; ++t) {
        ++collected[{canonical_key(g.induced(t)), canonical_key(g.induced(full & ~t))}];
        if (t == full) break;
    }
    std::vector<SweedlerTerm> terms;
    terms.reserve(collected.size());
    for (const auto& [pair, mult] : collected) terms.push_back({pair.first, pair.second, mult});
    return terms;
}

Rational counit(const GraphSum& a) { return a.coefficient(canonical_key(Multigraph())); }

namespace {

// Flats formula on a single connected component.
GraphSum antipode_flats_connected(const Multigraph& g) {
    int n = g.vertex_count();
    GraphSum result;
    for (EdgeSubset f : flats(g)) {
        int64_t orientations = count_acyclic_orientations(g.contract(f));
        if (orientations == 0) continue;
        Rational sign = Rational(-1).pow(n - rank_of(g, f));
        Multigraph spanning(n);
        for (int i = 0; i < g.edge_count(); ++i) {
            if (f >> i & 1) spanning.add_edge(g.edges()[i].u, g.edges()[i].v);
        }
        result.add_term(canonical_key(spanning), sign * Rational(orientations));
    }
    return result;
}

}  // namespace

GraphSum antipode_flats(const Multigraph& g) {
    auto comps = component_masks(g);
    if (comps.size() <= 1) {
        return g.vertex_count() == 0 ? GraphSum::unit() : antipode_flats_connected(g);
    }
    // S is an algebra map here (commutative Hopf algebra), so split per component.
    GraphSum result = GraphSum::unit();
    for (uint64_t mask : comps) result *= antipode_flats_connected(g.induced(mask));
    return result;
}

namespace {

void takeuchi_recurse(const Multigraph& g, uint64_t remaining, int blocks,
                      const Multigraph& partial, GraphSum& out) {
    if (remaining == 0) {
        out.add_term(canonical_key(partial), Rational(-1).pow(blocks));
        return;
    }
    // First block of what is left: every nonempty subset, order significant.
    for (uint64_t sub = remaining;; sub = (sub - 1) & remaining) {
        if (sub != 0) {
            takeuchi_recurse(g, remaining & ~sub, blocks + 1,
                             disjoint_union(partial, g.induced(sub)), out);
        }
        if (sub == 0) break;
    }
}

}  // namespace

GraphSum antipode_takeuchi(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 8) throw std::invalid_argument("antipode_takeuchi(): more than 8 vertices");
    if (n == 0) return GraphSum::unit();
    GraphSum result;
    takeuchi_recurse(g, (uint64_t(1) << n) - 1, 0, Multigraph(), result);
    return result;
}

GraphSum antipode_linear(const GraphSum& a) {
    GraphSum result;
    for (const auto& [key, coeff] : a.terms()) {
        result += coeff * antipode_flats(key.to_multigraph());
    }
    return result;
}

bool hopf_axiom_check(const Multigraph& g) {
    GraphSum lhs;
    for (const SweedlerTerm& term : coproduct(g)) {
        lhs += Rational(term.multiplicity) *
               (antipode_flats(term.left.to_multigraph()) * GraphSum::basis(term.right));
    }
    return lhs == counit(GraphSum::basis(g)) * GraphSum::unit();
}

}  // namespace hopfgraph
