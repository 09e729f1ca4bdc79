#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfgraph {

/// Largest graph the canonizer will accept.
inline constexpr int kCanonicalCap = 10;

struct Edge {
    int u = 0;  // u <= v; u == v encodes a loop
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph on vertices 0..n-1. Loops and parallel edges
/// are kept as written; no derived quantity depends on the edge order.
/// Immutable in practice: every operation returns a new graph.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(int u, int v);

    bool has_loop() const;
    int loop_count() const;
    int degree(int v) const;  // loops count twice

    int components() const;
    int rank() const { return n_ - components(); }

    /// Subgraph induced by the vertex set `vertex_mask` (bit i = vertex i),
    /// relabeled 0..|T|-1 preserving vertex order. Keeps exactly the edges
    /// with both endpoints inside, loops included.
    Multigraph induced(uint64_t vertex_mask) const;

    /// Contracts every edge whose index bit is set; contracted edges vanish,
    /// all others keep their (merged) endpoints, so parallel edges and new
    /// loops survive. Merged vertex classes are relabeled by smallest member.
    Multigraph contract(uint64_t edge_mask) const;

    /// Copy without the edge at `index`.
    Multigraph without_edge(int index) const;

    /// Loops dropped, parallel edges collapsed to one.
    Multigraph underlying_simple() const;

    // named families
    static Multigraph edgeless(int n);
    static Multigraph complete(int n);
    static Multigraph cycle(int n);  // C_1 = one loop, C_2 = double edge
    static Multigraph path(int n);   // path on n vertices
    static Multigraph star(int leaves);  // K_{leaves,1}, hub at vertex 0
    static Multigraph named(std::string_view family, int size);

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

/// Vertex masks of the connected components, ordered by smallest vertex.
std::vector<uint64_t> component_masks(const Multigraph& g);

/// Isomorphism-class identifier: the minimal byte encoding of the graph over
/// all vertex relabelings. Two multigraphs (loops and multiplicities
/// respected) are isomorphic iff their keys are equal. Keys order totally
/// and decode back to a canonical representative.
class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    int graph_vertex_count() const;
    Multigraph to_multigraph() const;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
        return a.bytes_ < b.bytes_;
    }

private:
    std::string bytes_;
};

/// Throws std::invalid_argument when vertex_count() > kCanonicalCap.
CanonicalKey canonical_key(const Multigraph& g);

}  // namespace hopfgraph

template <>
struct std::hash<hopfgraph::CanonicalKey> {
    size_t operator()(const hopfgraph::CanonicalKey& k) const noexcept {
        return std::hash<std::string>{}(k.bytes());
    }
};
