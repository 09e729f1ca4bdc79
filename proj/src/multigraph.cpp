#include "hopfgraph/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hopfgraph {

namespace {

// Tiny union-find over vertex indices.
struct Dsu {
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

void check_vertex(int v, int n) {
    if (v < 0 || v >= n) {
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for n=" +
                                std::to_string(n));
    }
}

}  // namespace

Multigraph::Multigraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

Multigraph::Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : Multigraph(vertex_count) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) add_edge(u, v);
}

void Multigraph::add_edge(int u, int v) {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v});
}

bool Multigraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

int Multigraph::loop_count() const {
    return static_cast<int>(
        std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; }));
}

int Multigraph::degree(int v) const {
    check_vertex(v, n_);
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int Multigraph::components() const {
    Dsu dsu(n_);
    for (const Edge& e : edges_) dsu.merge(e.u, e.v);
    int count = 0;
    for (int v = 0; v < n_; ++v) {
        if (dsu.find(v) == v) ++count;
    }
    return count;
}

Multigraph Multigraph::induced(uint64_t vertex_mask) const {
    if (n_ > 64) throw std::invalid_argument("induced(): vertex bitmasks support up to 64 vertices");
    if (n_ < 64 && (vertex_mask >> n_) != 0) {
        throw std::out_of_range("induced(): vertex mask exceeds vertex range");
    }
    std::vector<int> relabel(n_, -1);
    int kept = 0;
    for (int v = 0; v < n_; ++v) {
        if (vertex_mask >> v & 1) relabel[v] = kept++;
    }
    Multigraph result(kept);
    for (const Edge& e : edges_) {
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0) result.add_edge(relabel[e.u], relabel[e.v]);
    }
    return result;
}

Multigraph Multigraph::contract(uint64_t edge_mask) const {
    if (edge_count() < 64 && (edge_mask >> edge_count()) != 0) {
        throw std::out_of_range("contract(): edge mask exceeds edge range");
    }
    Dsu dsu(n_);
    for (int i = 0; i < edge_count(); ++i) {
        if (edge_mask >> i & 1) dsu.merge(edges_[i].u, edges_[i].v);
    }
    std::vector<int> relabel(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v) {
        int root = dsu.find(v);
        if (relabel[root] < 0) relabel[root] = next++;
    }
    Multigraph result(next);
    for (int i = 0; i < edge_count(); ++i) {
        if (edge_mask >> i & 1) continue;
        result.add_edge(relabel[dsu.find(edges_[i].u)], relabel[dsu.find(edges_[i].v)]);
    }
    return result;
}

Multigraph Multigraph::without_edge(int index) const {
    if (index < 0 || index >= edge_count()) throw std::out_of_range("without_edge(): bad index");
    Multigraph result(n_);
    for (int i = 0; i < edge_count(); ++i) {
        if (i != index) result.edges_.push_back(edges_[i]);
    }
    return result;
}

Multigraph Multigraph::underlying_simple() const {
    std::set<std::pair<int, int>> seen;
    Multigraph result(n_);
    for (const Edge& e : edges_) {
        if (e.u == e.v) continue;
        if (seen.insert({e.u, e.v}).second) result.add_edge(e.u, e.v);
    }
    return result;
}

Multigraph Multigraph::edgeless(int n) { return Multigraph(n); }

Multigraph Multigraph::complete(int n) {
    Multigraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Multigraph Multigraph::cycle(int n) {
    if (n < 1) throw std::invalid_argument("cycle size must be >= 1");
    Multigraph g(n);
    if (n == 1) {
        g.add_edge(0, 0);
    } else if (n == 2) {
        g.add_edge(0, 1);
        g.add_edge(0, 1);
    } else {
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    }
    return g;
}

Multigraph Multigraph::path(int n) {
    if (n < 0) throw std::invalid_argument("path size must be >= 0");
    Multigraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Multigraph Multigraph::star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star size must be >= 0");
    Multigraph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Multigraph Multigraph::named(std::string_view family, int size) {
    if (family == "complete") return complete(size);
    if (family == "cycle") return cycle(size);
    if (family == "path") return path(size);
    if (family == "star") return star(size);
    if (family == "edgeless") return edgeless(size);
    throw std::invalid_argument("unknown graph family: '" + std::string(family) + "'");
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    Multigraph result(a.vertex_count() + b.vertex_count());
    for (const Edge& e : a.edges()) result.add_edge(e.u, e.v);
    int offset = a.vertex_count();
    for (const Edge& e : b.edges()) result.add_edge(e.u + offset, e.v + offset);
    return result;
}

std::vector<uint64_t> component_masks(const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("component_masks(): more than 64 vertices");
    Dsu dsu(n);
    for (const Edge& e : g.edges()) dsu.merge(e.u, e.v);
    std::vector<uint64_t> by_root(n, 0);
    for (int v = 0; v < n; ++v) by_root[dsu.find(v)] |= uint64_t(1) << v;
    std::vector<uint64_t> masks;
    for (int v = 0; v < n; ++v) {
        if (dsu.find(v) == v) masks.push_back(by_root[v]);
    }
    std::sort(masks.begin(), masks.end(),
              [](uint64_t a, uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
    return masks;
}

// ---------------------------------------------------------------------------
// Canonization: minimize the byte encoding over all vertex relabelings.
//
// Encoding of a labeling: one byte (hi<<4)|lo per edge copy, where lo <= hi
// are the relabeled endpoints, listed sorted (byte order == (hi,lo) order).
// The key is that byte string prefixed with the vertex count. The search
// assigns new labels 0,1,2,... one original vertex at a time; placing vertex
// at position d appends exactly the edge bytes with hi == d, so the encoding
// grows as a comparable prefix and branches that exceed the incumbent prune.
// Vertices interchangeable by a transposition automorphism are tried once.
// ---------------------------------------------------------------------------

namespace {

struct Canonizer {
    int n;
    int mult[kCanonicalCap][kCanonicalCap] = {};
    std::vector<int> swap_class;    // transposition-automorphism class per vertex
    std::vector<int> placed;        // placed[d] = original vertex at position d
    std::vector<char> used;
    std::vector<uint8_t> current;
    std::vector<uint8_t> best;

    explicit Canonizer(const Multigraph& g) : n(g.vertex_count()) {
        for (const Edge& e : g.edges()) {
            if (e.u == e.v) {
                ++mult[e.u][e.u];
            } else {
                ++mult[e.u][e.v];
                ++mult[e.v][e.u];
            }
        }
        swap_class.resize(n);
        std::iota(swap_class.begin(), swap_class.end(), 0);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (swap_class[v] != v) continue;
                if (transposable(u, v)) swap_class[v] = swap_class[u];
            }
        }
        used.assign(n, 0);
        placed.resize(n);
    }

    bool transposable(int u, int v) const {
        if (mult[u][u] != mult[v][v]) return false;
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            if (mult[u][w] != mult[v][w]) return false;
        }
        return true;
    }

    void seed_with_identity(int edge_bytes) {
        best.reserve(edge_bytes);
        for (int hi = 0; hi < n; ++hi) {
            for (int lo = 0; lo <= hi; ++lo) {
                for (int c = 0; c < mult[lo][hi]; ++c) {
                    best.push_back(static_cast<uint8_t>(hi << 4 | lo));
                }
            }
        }
    }

    // tie == true means current equals best on the shared prefix. Pruning on
    // "greater" stays sound as best shrinks; leaves re-compare in full.
    void search(int depth, bool tie) {
        if (depth == n) {
            if (current < best) best = current;
            return;
        }
        uint32_t tried_classes = 0;
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            uint32_t class_bit = uint32_t(1) << swap_class[cand];
            if (tried_classes & class_bit) continue;
            tried_classes |= class_bit;

            size_t mark = current.size();
            bool child_tie = tie;
            bool pruned = false;
            for (int lo = 0; lo <= depth && !pruned; ++lo) {
                int count = lo < depth ? mult[placed[lo]][cand] : mult[cand][cand];
                uint8_t byte = static_cast<uint8_t>(depth << 4 | lo);
                for (int c = 0; c < count; ++c) {
                    if (child_tie) {
                        uint8_t incumbent = best[current.size()];
                        if (byte > incumbent) {
                            pruned = true;
                            break;
                        }
                        if (byte < incumbent) child_tie = false;
                    }
                    current.push_back(byte);
                }
            }
            if (!pruned) {
                used[cand] = 1;
                placed[depth] = cand;
                search(depth + 1, child_tie);
                used[cand] = 0;
            }
            current.resize(mark);
        }
    }
};

}  // namespace

CanonicalKey canonical_key(const Multigraph& g) {
    if (g.vertex_count() > kCanonicalCap) {
        throw std::invalid_argument("canonical_key(): graph exceeds canonization cap of " +
                                    std::to_string(kCanonicalCap) + " vertices");
    }
    Canonizer canon(g);
    canon.seed_with_identity(g.edge_count());
    if (g.vertex_count() > 0) {
        canon.current.reserve(g.edge_count());
        canon.search(0, true);
    }
    std::string bytes;
    bytes.reserve(canon.best.size() + 1);
    bytes.push_back(static_cast<char>(g.vertex_count()));
    bytes.append(canon.best.begin(), canon.best.end());
    return CanonicalKey(std::move(bytes));
}

int CanonicalKey::graph_vertex_count() const {
    if (bytes_.empty()) throw std::logic_error("empty canonical key");
    return static_cast<uint8_t>(bytes_[0]);
}

Multigraph CanonicalKey::to_multigraph() const {
    Multigraph g(graph_vertex_count());
    for (size_t i = 1; i < bytes_.size(); ++i) {
        auto byte = static_cast<uint8_t>(bytes_[i]);
        g.add_edge(byte & 0xF, byte >> 4);
    }
    return g;
}

}  // namespace hopfgraph
