// Independent brute-force oracles for the unit tests. Everything here sticks
// to first principles (exhaustive enumeration, textbook recurrences) so the
// library code paths they check cannot leak in.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "hopfgraph/multigraph.hpp"
#include "hopfgraph/rational.hpp"

namespace oracles {

using hopfgraph::Edge;
using hopfgraph::Multigraph;

// Proper colorings of G with k colors via all k^n assignments.
inline int64_t count_proper_colorings(const Multigraph& g, int k) {
    int n = g.vertex_count();
    if (n == 0) return 1;
    if (k == 0) return 0;
    std::vector<int> color(n, 0);
    int64_t count = 0;
    while (true) {
        bool proper = true;
        for (const Edge& e : g.edges()) {
            if (color[e.u] == color[e.v]) {
                proper = false;
                break;
            }
        }
        if (proper) ++count;
        int at = 0;
        while (at < n && ++color[at] == k) color[at++] = 0;
        if (at == n) break;
    }
    return count;
}

// Colorings where no vertex meets m or more monochromatic edges.
inline int64_t count_degree_bounded_colorings(const Multigraph& g, int k, int m) {
    int n = g.vertex_count();
    if (n == 0) return 1;
    if (k == 0) return 0;
    std::vector<int> color(n, 0);
    int64_t count = 0;
    while (true) {
        std::vector<int> mono_degree(n, 0);
        for (const Edge& e : g.edges()) {
            if (color[e.u] == color[e.v]) {
                ++mono_degree[e.u];
                ++mono_degree[e.v];
            }
        }
        bool ok = true;
        for (int v = 0; v < n; ++v) {
            if (mono_degree[v] >= m) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        int at = 0;
        while (at < n && ++color[at] == k) color[at++] = 0;
        if (at == n) break;
    }
    return count;
}

// Independent vertex sets (no edge with both endpoints inside; loops count).
inline std::vector<uint64_t> independent_sets(const Multigraph& g) {
    std::vector<uint64_t> result;
    int n = g.vertex_count();
    for (uint64_t q = 0; q < (uint64_t(1) << n); ++q) {
        bool ok = true;
        for (const Edge& e : g.edges()) {
            if ((q >> e.u & 1) && (q >> e.v & 1)) {
                ok = false;
                break;
            }
        }
        if (ok) result.push_back(q);
    }
    return result;
}

// Bell numbers B_0..B_n by the Bell-triangle recurrence.
inline std::vector<int64_t> bell_numbers(int n_max) {
    std::vector<int64_t> bell{1};
    std::vector<int64_t> row{1};
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int64_t> next{row.back()};
        for (int64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
        bell.push_back(row.front());
    }
    return bell;
}

// Flats by definition: A is a flat iff no edge outside A has its endpoints
// connected within (V, A). Exhaustive over all edge subsets.
inline std::vector<uint64_t> flats_bruteforce(const Multigraph& g) {
    int n = g.vertex_count();
    int e = g.edge_count();
    std::vector<uint64_t> result;
    for (uint64_t a = 0; a < (uint64_t(1) << e); ++a) {
        // components of (V, A) via label propagation
        std::vector<int> label(n);
        for (int v = 0; v < n; ++v) label[v] = v;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < e; ++i) {
                if (!(a >> i & 1)) continue;
                int lu = label[g.edges()[i].u];
                int lv = label[g.edges()[i].v];
                if (lu != lv) {
                    int lo = std::min(lu, lv);
                    for (int v = 0; v < n; ++v) {
                        if (label[v] == lu || label[v] == lv) label[v] = lo;
                    }
                    changed = true;
                }
            }
        }
        bool flat = true;
        for (int i = 0; i < e && flat; ++i) {
            if (a >> i & 1) continue;
            if (label[g.edges()[i].u] == label[g.edges()[i].v]) flat = false;
        }
        if (flat) result.push_back(a);
    }
    return result;
}

// Number of spanning trees: (n-1)-subsets of edges that are acyclic.
inline int64_t spanning_trees_bruteforce(const Multigraph& g) {
    int n = g.vertex_count();
    int e = g.edge_count();
    int64_t count = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << e); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        std::vector<int> parent(n);
        for (int v = 0; v < n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (int i = 0; i < e && acyclic; ++i) {
            if (!(mask >> i & 1)) continue;
            int ru = find(g.edges()[i].u);
            int rv = find(g.edges()[i].v);
            if (ru == rv) acyclic = false;
            else parent[ru] = rv;
        }
        if (acyclic) ++count;
    }
    return count;
}

// Relabel g by the permutation new_label[old] = image.
inline Multigraph permuted(const Multigraph& g, const std::vector<int>& image) {
    Multigraph out(g.vertex_count());
    for (const Edge& e : g.edges()) out.add_edge(image[e.u], image[e.v]);
    return out;
}

}  // namespace oracles
