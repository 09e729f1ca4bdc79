#pragma once

#include <cstddef>
#include <optional>

#include "hopfgraph/multigraph.hpp"
#include "hopfgraph/poly.hpp"

namespace hopfgraph {

/// Process-wide memo for Tutte polynomials, keyed by canonical key.
/// Thread contract: concurrent lookups and insert-if-absent; values are
/// idempotent so racing inserts are harmless. HOPFGRAPH_CACHE=off disables it.
class TutteCache {
public:
    static TutteCache& instance();

    bool enabled() const { return enabled_; }
    void set_enabled(bool on);
    std::optional<BivarPoly> lookup(const CanonicalKey& key) const;
    void store(const CanonicalKey& key, const BivarPoly& value);
    void clear();
    size_t size() const;

private:
    TutteCache();
    struct Impl;
    Impl* impl_;
    bool enabled_;
};

/// T_G(x, y) by deletion-contraction, memoized by isomorphism class:
/// edgeless -> 1, loop -> y*T(G-e), cut-edge -> x*T(G/e), otherwise
/// T(G-e) + T(G/e); multiplicative over components.
BivarPoly tutte(const Multigraph& g);

/// R_G(x, y) = sum over all edge subsets A of (x-1)^rk(A) (y-1)^nul(A),
/// by direct subset expansion (independent of the engine above). e(G) <= 24.
BivarPoly rank_nullity_poly(const Multigraph& g);

/// Chromatic polynomial via the standard specialization
/// (-1)^rk(G) k^c(G) T_G(1-k, 0), expanded exactly in k.
PolyInK chromatic(const Multigraph& g);

}  // namespace hopfgraph
