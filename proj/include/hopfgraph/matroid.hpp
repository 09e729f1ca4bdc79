#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfgraph/multigraph.hpp"

namespace hopfgraph {

/// Edge subset of a host multigraph: bit i = edge index i. Parallel copies
/// occupy distinct bits, so |A| counts them separately.
using EdgeSubset = uint64_t;

EdgeSubset full_edge_set(const Multigraph& g);

/// Matroid closure: every edge whose endpoints lie in one component of (V, A).
/// Extensive, monotone, idempotent; always contains every loop of the host.
EdgeSubset closure(const Multigraph& g, EdgeSubset a);

/// rank = n(G) - c(V, A); nullity = |A| - rank.
int rank_of(const Multigraph& g, EdgeSubset a);
int nullity_of(const Multigraph& g, EdgeSubset a);

bool is_flat(const Multigraph& g, EdgeSubset a);

/// All flats, generated as the edge sets internal to vertex partitions with
/// connected blocks; sorted ascending as masks.
std::vector<EdgeSubset> flats(const Multigraph& g);

/// a(G): zero when G has a loop, otherwise the acyclic-orientation count of
/// the underlying simple graph, evaluated as T(2, 0) through the Tutte engine.
int64_t count_acyclic_orientations(const Multigraph& g);

/// One assignment of directions to the non-loop edges of the underlying
/// simple graph, as (tail, head) arcs.
using Orientation = std::vector<std::pair<int, int>>;

/// Enumeration oracle for a(G): walks all 2^e orientations and keeps those
/// without a directed cycle. Empty when G has a loop. Requires e(simple) <= 24.
std::vector<Orientation> acyclic_orientations_bruteforce(const Multigraph& g);

}  // namespace hopfgraph
