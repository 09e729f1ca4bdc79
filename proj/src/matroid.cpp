#include "hopfgraph/matroid.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "hopfgraph/tutte.hpp"

namespace hopfgraph {

namespace {

void check_subset(const Multigraph& g, EdgeSubset a) {
    if (g.edge_count() < 64 && (a >> g.edge_count()) != 0) {
        throw std::out_of_range("edge subset exceeds host edge range");
    }
}

// Component labels of (V, A).
std::vector<int> component_labels(const Multigraph& g, EdgeSubset a) {
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        if (a >> i & 1) parent[find(g.edges()[i].u)] = find(g.edges()[i].v);
    }
    std::vector<int> label(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) label[v] = find(v);
    return label;
}

// True when the vertices of `subset` are connected using only edges with both
// endpoints inside `subset`.
bool induced_connected(const Multigraph& g, uint64_t subset) {
    if (subset == 0) return false;
    uint64_t reached = subset & (~subset + 1);  // lowest vertex
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Edge& e : g.edges()) {
            uint64_t ubit = uint64_t(1) << e.u;
            uint64_t vbit = uint64_t(1) << e.v;
            if ((subset & ubit) == 0 || (subset & vbit) == 0) continue;
            bool has_u = reached & ubit;
            bool has_v = reached & vbit;
            if (has_u != has_v) {
                reached |= ubit | vbit;
                grew = true;
            }
        }
    }
    return reached == subset;
}

void enumerate_flats(const Multigraph& g, uint64_t remaining, EdgeSubset current,
                     std::vector<EdgeSubset>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    uint64_t lowest = remaining & (~remaining + 1);
    // Every connected subset containing the lowest remaining vertex becomes a block.
    for (uint64_t sub = remaining;; sub = (sub - 1) & remaining) {
        if ((sub & lowest) && induced_connected(g, sub)) {
            EdgeSubset inside = 0;
            for (int i = 0; i < g.edge_count(); ++i) {
                const Edge& e = g.edges()[i];
                if ((sub >> e.u & 1) && (sub >> e.v & 1)) inside |= EdgeSubset(1) << i;
            }
            enumerate_flats(g, remaining & ~sub, current | inside, out);
        }
        if (sub == 0) break;
    }
}

}  // namespace

EdgeSubset full_edge_set(const Multigraph& g) {
    return g.edge_count() == 64 ? ~EdgeSubset(0) : (EdgeSubset(1) << g.edge_count()) - 1;
}

EdgeSubset closure(const Multigraph& g, EdgeSubset a) {
    check_subset(g, a);
    std::vector<int> label = component_labels(g, a);
    EdgeSubset closed = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (label[g.edges()[i].u] == label[g.edges()[i].v]) closed |= EdgeSubset(1) << i;
    }
    return closed;
}

int rank_of(const Multigraph& g, EdgeSubset a) {
    check_subset(g, a);
    std::vector<int> label = component_labels(g, a);
    int comps = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (label[v] == v) ++comps;
    }
    return g.vertex_count() - comps;
}

int nullity_of(const Multigraph& g, EdgeSubset a) {
    return std::popcount(a) - rank_of(g, a);
}

bool is_flat(const Multigraph& g, EdgeSubset a) { return closure(g, a) == a; }

std::vector<EdgeSubset> flats(const Multigraph& g) {
    if (g.vertex_count() > 64) throw std::invalid_argument("flats(): more than 64 vertices");
    std::vector<EdgeSubset> out;
    uint64_t all_vertices =
        g.vertex_count() == 64 ? ~uint64_t(0) : (uint64_t(1) << g.vertex_count()) - 1;
    enumerate_flats(g, all_vertices, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

int64_t count_acyclic_orientations(const Multigraph& g) {
    if (g.has_loop()) return 0;
    return tutte(g.underlying_simple()).eval(Rational(2), Rational(0)).as_int64();
}

std::vector<Orientation> acyclic_orientations_bruteforce(const Multigraph& g) {
    if (g.has_loop()) return {};
    Multigraph simple = g.underlying_simple();
    int e = simple.edge_count();
    if (e > 24) throw std::invalid_argument("acyclic_orientations_bruteforce(): more than 24 edges");
    int n = simple.vertex_count();
    std::vector<Orientation> result;
    for (uint32_t signs = 0; signs < (uint32_t(1) << e); ++signs) {
        Orientation arcs;
        arcs.reserve(e);
        std::vector<int> indegree(n, 0);
        std::vector<std::vector<int>> out_adj(n);
        for (int i = 0; i < e; ++i) {
            auto [u, v] = signs >> i & 1 ? std::pair{simple.edges()[i].v, simple.edges()[i].u}
                                         : std::pair{simple.edges()[i].u, simple.edges()[i].v};
            arcs.push_back({u, v});
            out_adj[u].push_back(v);
            ++indegree[v];
        }
        // Kahn's algorithm; acyclic iff all vertices drain.
        std::vector<int> queue;
        for (int v = 0; v < n; ++v) {
            if (indegree[v] == 0) queue.push_back(v);
        }
        int drained = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++drained;
            for (int w : out_adj[v]) {
                if (--indegree[w] == 0) queue.push_back(w);
            }
        }
        if (drained == n) result.push_back(std::move(arcs));
    }
    return result;
}

}  // namespace hopfgraph
