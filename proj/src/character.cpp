#include "hopfgraph/character.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "hopfgraph/hopf.hpp"
#include "hopfgraph/io.hpp"
#include "hopfgraph/matroid.hpp"
#include "hopfgraph/tutte.hpp"

namespace hopfgraph {

Character zeta_char() {
    return {"zeta", [](const Multigraph& g) { return Rational(g.edge_count() == 0 ? 1 : 0); }};
}

Character eps_char() {
    return {"eps", [](const Multigraph& g) { return Rational(g.vertex_count() == 0 ? 1 : 0); }};
}

Character xi_char(const Rational& c) {
    return {"xi:" + c.str(), [c](const Multigraph& g) { return c.pow(g.vertex_count()); }};
}

Character tau_char(const Rational& x, const Rational& y) {
    return {"tau:" + x.str() + "," + y.str(),
            [x, y](const Multigraph& g) { return tutte(g).eval(x, y); }};
}

Character rho_char(const Rational& x, const Rational& y) {
    return {"rho:" + x.str() + "," + y.str(), [x, y](const Multigraph& g) {
                if (x == Rational(1)) {
                    // Only loop subsets have rank 0: R_G(1,y) = y^(#loops).
                    return y.pow(g.loop_count());
                }
                Rational xm1 = x - Rational(1);
                return xm1.pow(g.rank()) * tutte(g).eval(x / xm1, y);
            }};
}

Character acyclic_char() {
    return {"alpha", [](const Multigraph& g) {
                return Rational(!g.has_loop() && g.edge_count() == g.rank() ? 1 : 0);
            }};
}

Character family_char(std::string name, std::function<bool(const Multigraph&)> member) {
    return {std::move(name),
            [member = std::move(member)](const Multigraph& g) { return Rational(member(g) ? 1 : 0); }};
}

namespace {

bool is_simple(const Multigraph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
        if (e.u == e.v || !seen.insert({e.u, e.v}).second) return false;
    }
    return true;
}

// Backtracking injective embedding of h into g (both simple), mapping every
// h-edge onto a g-edge. Vertices of h are matched in BFS order so each new
// vertex has at least one matched neighbor (after the first of a component).
bool embed(const std::vector<std::vector<int>>& g_adj, const std::vector<std::vector<int>>& h_adj,
           const std::vector<int>& order, std::vector<int>& image, std::vector<char>& taken,
           size_t at) {
    if (at == order.size()) return true;
    int hv = order[at];
    int g_n = static_cast<int>(g_adj.size());
    for (int gv = 0; gv < g_n; ++gv) {
        if (taken[gv]) continue;
        bool ok = true;
        for (int hn : h_adj[hv]) {
            if (image[hn] >= 0 &&
                !std::binary_search(g_adj[gv].begin(), g_adj[gv].end(), image[hn])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[hv] = gv;
        taken[gv] = 1;
        if (embed(g_adj, h_adj, order, image, taken, at + 1)) return true;
        image[hv] = -1;
        taken[gv] = 0;
    }
    return false;
}

std::vector<std::vector<int>> sorted_adjacency(const Multigraph& simple) {
    std::vector<std::vector<int>> adj(simple.vertex_count());
    for (const Edge& e : simple.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

}  // namespace

bool has_subgraph(const Multigraph& g, const Multigraph& h) {
    Multigraph gs = g.underlying_simple();
    if (h.vertex_count() > gs.vertex_count() || h.edge_count() > gs.edge_count()) return false;
    if (h.vertex_count() == 0) return true;
    auto g_adj = sorted_adjacency(gs);
    auto h_adj = sorted_adjacency(h);
    // BFS order over h, seeding each component at its lowest vertex.
    std::vector<int> order;
    std::vector<char> seen(h.vertex_count(), 0);
    for (int start = 0; start < h.vertex_count(); ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        order.push_back(start);
        for (size_t head = order.size() - 1; head < order.size(); ++head) {
            for (int w : h_adj[order[head]]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    std::vector<int> image(h.vertex_count(), -1);
    std::vector<char> taken(gs.vertex_count(), 0);
    return embed(g_adj, h_adj, order, image, taken, 0);
}

Character eta_char(const Multigraph& h) {
    if (h.vertex_count() == 0 || h.components() != 1) {
        throw std::invalid_argument("eta_char(): H must be connected");
    }
    if (!is_simple(h)) {
        throw std::invalid_argument("eta_char(): H must be simple (no loops or parallel edges)");
    }
    return {"eta:" + format_text(h),
            [h](const Multigraph& g) { return Rational(has_subgraph(g, h) ? 0 : 1); }};
}

Character parse_char_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "zeta") return zeta_char();
    if (head == "eps") return eps_char();
    if (head == "alpha") return acyclic_char();
    if (head == "xi") return xi_char(Rational::parse(args));
    if (head == "tau" || head == "rho") {
        auto comma = args.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("character spec '" + spec + "' needs x,y parameters");
        }
        Rational x = Rational::parse(args.substr(0, comma));
        Rational y = Rational::parse(args.substr(comma + 1));
        return head == "tau" ? tau_char(x, y) : rho_char(x, y);
    }
    if (head == "eta") return eta_char(parse_graph(args));
    throw std::invalid_argument("unknown character spec: '" + spec + "'");
}

// --- group structure --------------------------------------------------------

Character convolve(const Character& phi, const Character& psi) {
    return {"conv(" + phi.name() + "," + psi.name() + ")", [phi, psi](const Multigraph& g) {
                int n = g.vertex_count();
                if (n > 63) throw std::invalid_argument("convolve(): more than 63 vertices");
                uint64_t full = (uint64_t(1) << n) - 1;
                Rational acc(0);
                for (uint64_t t = 0;; ++t) {
                    acc += phi(g.induced(t)) * psi(g.induced(full & ~t));
                    if (t == full) break;
                }
                return acc;
            }};
}

Character inverse(const Character& phi) {
    return {"inv(" + phi.name() + ")",
            [phi](const Multigraph& g) { return apply(phi, antipode_flats(g)); }};
}

Rational apply(const Character& phi, const GraphSum& a) {
    Rational acc(0);
    for (const auto& [key, coeff] : a.terms()) acc += coeff * phi(key.to_multigraph());
    return acc;
}

std::vector<Rational> induced_subgraph_values(const Character& phi, const Multigraph& g) {
    int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("induced_subgraph_values(): graph too large");
    std::vector<Rational> values(uint64_t(1) << n);
    std::map<CanonicalKey, Rational> memo;
    for (uint64_t mask = 0; mask < values.size(); ++mask) {
        Multigraph sub = g.induced(mask);
        CanonicalKey key = canonical_key(sub);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, phi(sub)).first;
        values[mask] = it->second;
    }
    return values;
}

std::vector<Rational> subset_convolution(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size(), Rational(0));
    for (uint64_t mask = 0; mask < a.size(); ++mask) {
        // Over all submasks of mask, including both trivial splits.
        uint64_t sub = mask;
        while (true) {
            out[mask] += a[sub] * b[mask & ~sub];
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
    }
    return out;
}

namespace {

Rational positive_power_value(const Character& phi, uint64_t exponent, const Multigraph& g) {
    std::vector<Rational> base = induced_subgraph_values(phi, g);
    std::vector<Rational> result;  // empty = convolution identity, handled lazily
    while (exponent > 0) {
        if (exponent & 1) result = result.empty() ? base : subset_convolution(result, base);
        exponent >>= 1;
        if (exponent > 0) base = subset_convolution(base, base);
    }
    return result.back();
}

}  // namespace

Rational convolution_power_value(const Character& phi, int64_t k, const Multigraph& g) {
    if (k == 0) return eps_char()(g);
    if (k == 1) return phi(g);
    if (k < 0) return positive_power_value(inverse(phi), static_cast<uint64_t>(-k), g);
    return positive_power_value(phi, static_cast<uint64_t>(k), g);
}

Character power(const Character& phi, int64_t k) {
    if (k == 0) return eps_char();
    if (k == 1) return phi;
    return {"pow(" + phi.name() + "," + std::to_string(k) + ")",
            [phi, k](const Multigraph& g) { return convolution_power_value(phi, k, g); }};
}

Character bar(const Character& phi) {
    return {"bar(" + phi.name() + ")", [phi](const Multigraph& g) {
                return Rational(-1).pow(g.vertex_count()) * phi(g);
            }};
}

Character tilde(const Character& phi) {
    return {"tilde(" + phi.name() + ")",
            [phi](const Multigraph& g) { return Rational(-1).pow(g.rank()) * phi(g); }};
}

PolyInK poly_in_k(const Character& phi, const Multigraph& g) {
    std::vector<Rational> values;
    values.reserve(g.vertex_count() + 1);
    for (int k = 0; k <= g.vertex_count(); ++k) {
        values.push_back(convolution_power_value(phi, k, g));
    }
    return PolyInK::interpolate(values);
}

Rational inverse_via_flats(const std::function<bool(const Multigraph&)>& member,
                           const Multigraph& g) {
    int n = g.vertex_count();
    Rational acc(0);
    for (EdgeSubset f : flats(g)) {
        Multigraph spanning(n);
        for (int i = 0; i < g.edge_count(); ++i) {
            if (f >> i & 1) spanning.add_edge(g.edges()[i].u, g.edges()[i].v);
        }
        if (!member(spanning)) continue;
        acc += Rational(-1).pow(n - rank_of(g, f)) *
               Rational(count_acyclic_orientations(g.contract(f)));
    }
    return acc;
}

PolyInK degree_chromatic(const Multigraph& g, int m) {
    if (m < 1) throw std::invalid_argument("degree_chromatic(): m must be >= 1");
    return poly_in_k(eta_char(Multigraph::star(m)), g);
}

Rational tree_avoidance_inverse(const Multigraph& tree, const Multigraph& h) {
    if (tree.components() != 1 || tree.has_loop() || tree.edge_count() != tree.rank()) {
        throw std::invalid_argument("tree_avoidance_inverse(): input is not a tree");
    }
    Character eta = eta_char(h);  // also validates h
    int n = tree.vertex_count();
    int r = n - 1;
    Rational acc(0);
    for (EdgeSubset f = 0;; ++f) {
        Multigraph forest(n);
        for (int i = 0; i < tree.edge_count(); ++i) {
            if (f >> i & 1) forest.add_edge(tree.edges()[i].u, tree.edges()[i].v);
        }
        if (eta(forest) == Rational(1)) {
            acc -= Rational(-2).pow(r - std::popcount(f));
        }
        if (f == full_edge_set(tree)) break;
    }
    return acc;
}

PolyInK self_avoidance_poly(const Multigraph& g) {
    if (g.vertex_count() < 2 || g.components() != 1) {
        throw std::invalid_argument("self_avoidance_poly(): G must be connected with n >= 2");
    }
    return poly_in_k(eta_char(g), g);
}

}  // namespace hopfgraph
