#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopfgraph/graph_sum.hpp"
#include "hopfgraph/multigraph.hpp"
#include "hopfgraph/poly.hpp"
#include "hopfgraph/rational.hpp"

namespace hopfgraph {

/// Multiplicative functional on the graph algebra: eval(G disjoint-union H) =
/// eval(G) * eval(H) and eval(K_0) = 1. Multiplicativity is the constructor's
/// promise (and is property-tested); the group structure below relies on it.
class Character {
public:
    using EvalFn = std::function<Rational(const Multigraph&)>;

    Character(std::string name, EvalFn eval) : name_(std::move(name)), eval_(std::move(eval)) {}

    const std::string& name() const { return name_; }
    Rational operator()(const Multigraph& g) const { return eval_(g); }

private:
    std::string name_;
    EvalFn eval_;
};

// --- built-in families ------------------------------------------------------

Character zeta_char();                        // 1 iff no edges
Character eps_char();                         // 1 iff no vertices (counit)
Character xi_char(const Rational& c);         // c^n(G)
Character tau_char(const Rational& x, const Rational& y);  // T_G(x, y)
Character rho_char(const Rational& x, const Rational& y);  // R_G(x, y)
Character acyclic_char();                     // 1 iff G is a forest (loops forbidden)

/// Indicator of a component-multiplicative family Omega; the predicate's
/// multiplicativity is trusted, not checked.
Character family_char(std::string name, std::function<bool(const Multigraph&)> member);

/// Avoidance character: 1 iff G has no subgraph isomorphic to H (ordinary
/// subgraph containment on underlying simple graphs). H must be connected
/// and simple; anything else is rejected.
Character eta_char(const Multigraph& h);

/// True when a subgraph of G's underlying simple graph is isomorphic to H.
bool has_subgraph(const Multigraph& g, const Multigraph& h);

/// Parses CLI character specs: zeta | eps | alpha | xi:c | tau:x,y | rho:x,y
/// | eta:<graph spec>, rationals written p/q.
Character parse_char_spec(const std::string& spec);

// --- group structure --------------------------------------------------------

/// (phi * psi)(G) = sum over vertex subsets T of phi(G|_T) psi(G|_rest).
Character convolve(const Character& phi, const Character& psi);

/// Convolution inverse phi o S (antipode composition).
Character inverse(const Character& phi);

/// phi^k: eps at k = 0, binary-split convolution for k >= 2, inverse first
/// for k < 0. Negative powers inherit the antipode's canonization cap.
Character power(const Character& phi, int64_t k);

Character bar(const Character& phi);    // (-1)^n(G) phi(G); convolution automorphism
Character tilde(const Character& phi);  // (-1)^rk(G) phi(G); not an automorphism

/// Linear extension of phi to sums.
Rational apply(const Character& phi, const GraphSum& a);

/// Values of phi on every induced subgraph of g, indexed by vertex bitmask
/// (memoized per isomorphism class within the call). 2^n entries.
std::vector<Rational> induced_subgraph_values(const Character& phi, const Multigraph& g);

/// Subset convolution of two such tables: out[S] = sum over T subseteq S of
/// a[T] * b[S minus T]. This is character convolution on value tables.
std::vector<Rational> subset_convolution(const std::vector<Rational>& a,
                                         const std::vector<Rational>& b);

/// phi^k(G) evaluated by subset-vector convolution (equals power(phi,k)(G)).
Rational convolution_power_value(const Character& phi, int64_t k, const Multigraph& g);

/// The polynomial P_{phi,G} with P(k) = phi^k(G) for every integer k,
/// interpolated through k = 0..n(G).
PolyInK poly_in_k(const Character& phi, const Multigraph& g);

/// psi_Omega^{-1}(G) via the flats formula:
/// sum over flats F with (V, F) in Omega of (-1)^(n-rk F) a(G/F).
Rational inverse_via_flats(const std::function<bool(const Multigraph&)>& member,
                           const Multigraph& g);

/// Degree-chromatic polynomial P_m = P_{eta_{K_{m,1}}}; m = 1 is chromatic.
PolyInK degree_chromatic(const Multigraph& g, int m);

/// eta_H^{-1} on a tree: -sum over H-free forests F of (-2)^(r - |F|), r = n-1.
Rational tree_avoidance_inverse(const Multigraph& tree, const Multigraph& h);

/// P_{eta_G}(G; k); equals k^n(G) - k for connected G with n >= 2.
PolyInK self_avoidance_poly(const Multigraph& g);

}  // namespace hopfgraph
