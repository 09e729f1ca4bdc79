#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hopfgraph/character.hpp"
#include "hopfgraph/multigraph.hpp"
#include "hopfgraph/rational.hpp"
#include "hopfgraph/tutte.hpp"

namespace hopfgraph {

/// P_{x,y}(G;k) = rho_{x,y}^k(G) evaluated by convolution (the base values on
/// induced subgraphs are shared across k; negative k goes through the
/// antipode). This is the LHS of every identity below.
Rational convolution_power_rho(const Multigraph& g, const Rational& x, const Rational& y,
                               int64_t k);

/// Crapo coboundary: rho_{t,t}^k(G) == k^c(G) (t-1)^rk(G) T_G((k+t-1)/(t-1), t)
/// over the grid. t = 1 must be excluded by the caller.
bool coboundary_check(const Multigraph& g, const std::vector<Rational>& t_grid,
                      const std::vector<int64_t>& k_grid);

/// The main evaluation identity
///   rho_{x,y}^k(G) == k^c(G) (x-1)^rk(G) T_G((k+x-1)/(x-1), y)
/// over the grid (x = 1 excluded), plus the x = 2 form
///   tau_{2,y}^k(G) == k^c T_G(k+1, y),
/// the x = 0 form
///   (tilde tau_{0,y})^k(G) == k^c (-1)^rk T_G(1-k, y),
/// and the k = -1 corollary (tilde tau_{0,y})^{-1} == bar(tau_{2,y}).
bool tutte_char_identity_check(const Multigraph& g, const std::vector<Rational>& x_grid,
                               const std::vector<Rational>& y_grid,
                               const std::vector<int64_t>& k_grid);

/// T(G;3,2) two ways for connected G: Tutte evaluation, and the subset sum
/// over U of 2^(e(G|_U) + e(G|_rest) - 1).
std::pair<Rational, Rational> t32_identity(const Multigraph& g);

/// Complete-graph convolution identity
///   T_{K_n}(k+1, y) == (1/k) sum over compositions n = a_1+...+a_k (parts >= 0)
///   of n!/(a_1!...a_k!) tau_{2,y}(K_{a_1}) ... tau_{2,y}(K_{a_k}),
/// with the closed form (n+k-1)!/k! checked at y = 0 and independent
/// 2^C(a,2) weights at y = 2. n <= 8, k in [1, 4].
bool kn_power_identities(int n, int k, const Rational& y);

/// Tutte from convolution powers, both simple forms:
///   T(G;x,y) == (x-1)^{-c} P_{2,y}(G; x-1)
///   T(G;x,y) == (-1)^n (x-1)^{-c} P_{0,y}(G; 1-x)
/// over integer x grids (x = 1 excluded) and rational y grids.
bool tutte_from_P(const Multigraph& g, const std::vector<int64_t>& x_grid,
                  const std::vector<Rational>& y_grid);

}  // namespace hopfgraph
