#pragma once

#include <cstdint>
#include <vector>

#include "hopfgraph/graph_sum.hpp"

namespace hopfgraph {

/// One collected summand of Delta(G) = sum over vertex subsets T of
/// G|_T (x) G|_complement. Multiplicities over all 2^n subsets sum to 2^n.
struct SweedlerTerm {
    CanonicalKey left;
    CanonicalKey right;
    int64_t multiplicity = 0;

    friend bool operator==(const SweedlerTerm&, const SweedlerTerm&) = default;
};

/// Coproduct of a basis graph, collected by key pairs. Requires n(G) <= 63.
std::vector<SweedlerTerm> coproduct(const Multigraph& g);

/// Coefficient of K_0.
Rational counit(const GraphSum& a);

/// Antipode by the flats formula:
/// S(G) = sum over flats F of (-1)^(n - rk F) a(G/F) [graph (V, F)],
/// computed per connected component and multiplied out.
GraphSum antipode_flats(const Multigraph& g);

/// Antipode oracle: sum over ordered set partitions pi of V into nonempty
/// blocks of (-1)^(#blocks) [disjoint union of induced subgraphs on blocks].
/// Requires n(G) <= 8.
GraphSum antipode_takeuchi(const Multigraph& g);

/// Linear extension of antipode_flats to sums.
GraphSum antipode_linear(const GraphSum& a);

/// Checks m (S (x) I) Delta (G) == counit(G) * K_0.
bool hopf_axiom_check(const Multigraph& g);

}  // namespace hopfgraph
