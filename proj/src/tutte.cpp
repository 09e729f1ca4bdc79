#include "hopfgraph/tutte.hpp"

#include <bit>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hopfgraph/matroid.hpp"

namespace hopfgraph {

struct TutteCache::Impl {
    mutable std::mutex mutex;
    std::unordered_map<std::string, BivarPoly> map;
};

TutteCache::TutteCache() : impl_(new Impl), enabled_(true) {
    if (const char* env = std::getenv("HOPFGRAPH_CACHE"); env && std::string_view(env) == "off") {
        enabled_ = false;
    }
}

TutteCache& TutteCache::instance() {
    static TutteCache cache;
    return cache;
}

void TutteCache::set_enabled(bool on) {
    enabled_ = on;
    if (!on) clear();
}

std::optional<BivarPoly> TutteCache::lookup(const CanonicalKey& key) const {
    if (!enabled_) return std::nullopt;
    std::lock_guard lock(impl_->mutex);
    auto it = impl_->map.find(key.bytes());
    if (it == impl_->map.end()) return std::nullopt;
    return it->second;
}

void TutteCache::store(const CanonicalKey& key, const BivarPoly& value) {
    if (!enabled_) return;
    std::lock_guard lock(impl_->mutex);
    impl_->map.emplace(key.bytes(), value);
}

void TutteCache::clear() {
    std::lock_guard lock(impl_->mutex);
    impl_->map.clear();
}

size_t TutteCache::size() const {
    std::lock_guard lock(impl_->mutex);
    return impl_->map.size();
}

namespace {

// Index of the first non-loop edge that is not a bridge, or -1.
int pick_working_edge(const Multigraph& g) {
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        if (e.u == e.v) continue;
        // Bridge test: do the endpoints stay connected without this copy?
        std::vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (int j = 0; j < g.edge_count(); ++j) {
            if (j != i) parent[find(g.edges()[j].u)] = find(g.edges()[j].v);
        }
        if (find(e.u) == find(e.v)) return i;
    }
    return -1;
}

BivarPoly tutte_connected(const Multigraph& g);

BivarPoly tutte_recurse(const Multigraph& g) {
    auto comps = component_masks(g);
    if (comps.size() <= 1) return tutte_connected(g);
    BivarPoly result = BivarPoly::one();
    for (uint64_t mask : comps) result *= tutte_connected(g.induced(mask));
    return result;
}

BivarPoly tutte_connected(const Multigraph& g) {
    if (g.edge_count() == 0) return BivarPoly::one();
    CanonicalKey key = canonical_key(g);
    if (auto hit = TutteCache::instance().lookup(key)) return *hit;

    BivarPoly result;
    if (int e = pick_working_edge(g); e >= 0) {
        result = tutte_recurse(g.without_edge(e)) + tutte_recurse(g.contract(uint64_t(1) << e));
    } else {
        // Only loops and bridges remain; both rules are multiplicative.
        int loop = -1;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (g.edges()[i].u == g.edges()[i].v) {
                loop = i;
                break;
            }
        }
        if (loop >= 0) {
            result = BivarPoly::y() * tutte_recurse(g.without_edge(loop));
        } else {
            result = BivarPoly::x() * tutte_recurse(g.contract(uint64_t(1)));
        }
    }
    TutteCache::instance().store(key, result);
    return result;
}

}  // namespace

BivarPoly tutte(const Multigraph& g) { return tutte_recurse(g); }

BivarPoly rank_nullity_poly(const Multigraph& g) {
    if (g.edge_count() > 24) {
        throw std::invalid_argument("rank_nullity_poly(): more than 24 edges");
    }
    BivarPoly xm1 = BivarPoly::x() - BivarPoly::one();
    BivarPoly ym1 = BivarPoly::y() - BivarPoly::one();
    // Powers of (x-1) and (y-1) up to the largest possible rank / nullity.
    std::vector<BivarPoly> xp{BivarPoly::one()}, yp{BivarPoly::one()};
    for (int i = 0; i < g.vertex_count(); ++i) xp.push_back(xp.back() * xm1);
    for (int i = 0; i < g.edge_count(); ++i) yp.push_back(yp.back() * ym1);
    BivarPoly result;
    for (EdgeSubset a = 0;; ++a) {
        int rk = rank_of(g, a);
        result += xp[rk] * yp[std::popcount(a) - rk];
        if (a == full_edge_set(g)) break;
    }
    return result;
}

PolyInK chromatic(const Multigraph& g) {
    BivarPoly t = tutte(g);
    // (-1)^rk k^c T(1-k, 0): only the y-free terms of T survive.
    PolyInK one_minus_k = PolyInK(Rational(1)) - PolyInK::variable();
    std::vector<PolyInK> powers{PolyInK(Rational(1))};
    PolyInK sum;
    for (const auto& [exps, coeff] : t.terms()) {
        if (exps.second != 0) continue;
        while (static_cast<int>(powers.size()) <= exps.first) {
            powers.push_back(powers.back() * one_minus_k);
        }
        sum += coeff * powers[exps.first];
    }
    Rational sign = Rational(-1).pow(g.rank());
    return sign * (PolyInK::monomial(g.components(), Rational(1)) * sum);
}

}  // namespace hopfgraph
