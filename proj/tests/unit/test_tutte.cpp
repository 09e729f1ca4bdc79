#include <doctest.h>

#include <thread>

#include "hopfgraph/matroid.hpp"
#include "hopfgraph/tutte.hpp"
#include "hopfgraph/tutte_identities.hpp"
#include "hopfgraph/verify.hpp"
#include "oracles.hpp"

using namespace hopfgraph;

TEST_CASE("base cases of the engine") {
    CHECK(tutte(Multigraph()) == BivarPoly::one());
    CHECK(tutte(Multigraph(3)) == BivarPoly::one());
    CHECK(tutte(Multigraph(1, {{0, 0}})) == BivarPoly::y());
    CHECK(tutte(Multigraph::complete(2)) == BivarPoly::x());
    // double edge: x + y
    CHECK(tutte(Multigraph::cycle(2)) == BivarPoly::x() + BivarPoly::y());
}

TEST_CASE("triangle against the subset-expansion oracle") {
    BivarPoly expected = BivarPoly::x() * BivarPoly::x() + BivarPoly::x() + BivarPoly::y();
    CHECK(tutte(Multigraph::complete(3)) == expected);

    // independent route: R -> T conversion of the rank-nullity expansion
    BivarPoly r = rank_nullity_poly(Multigraph::complete(3));
    for (int64_t x : {-2, -1, 0, 2, 3}) {
        for (int64_t y : {-2, 0, 1, 3}) {
            Rational xm1 = Rational(x) - Rational(1);
            CHECK(expected.eval(Rational(x), Rational(y)) ==
                  xm1.pow(2) * r.eval(Rational(x) / xm1, Rational(y)));
        }
    }
}

TEST_CASE("factorial evaluation T_{K_4}(3,0) = 5!/2!") {
    CHECK(tutte(Multigraph::complete(4)).eval(Rational(3), Rational(0)) == Rational(60));
}

TEST_CASE("rank-nullity polynomial basics") {
    CHECK(rank_nullity_poly(Multigraph(4)) == BivarPoly::one());
    CHECK(rank_nullity_poly(Multigraph::complete(2)) == BivarPoly::x());
    // R(1, y) = 1 on loopless graphs
    for (int64_t y : {-2, 0, 3}) {
        CHECK(rank_nullity_poly(Multigraph::cycle(4)).eval(Rational(1), Rational(y)) ==
              Rational(1));
    }
    // with loops, R(1, y) = y^(#loops)
    Multigraph loopy(2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK(rank_nullity_poly(loopy).eval(Rational(1), Rational(3)) == Rational(9));
}

TEST_CASE("engine is multiplicative over components") {
    Multigraph g = disjoint_union(Multigraph::cycle(3), Multigraph::star(2));
    CHECK(tutte(g) == tutte(Multigraph::cycle(3)) * tutte(Multigraph::star(2)));
}

TEST_CASE("chromatic polynomials") {
    PolyInK k = PolyInK::variable();
    CHECK(chromatic(Multigraph::complete(2)) == k * k - k);
    CHECK(chromatic(Multigraph(1, {{0, 0}})).is_zero());

    // falling factorials for K_n
    for (int n = 1; n <= 6; ++n) {
        PolyInK expected(Rational(1));
        for (int i = 0; i < n; ++i) expected *= k - PolyInK(Rational(i));
        CHECK(chromatic(Multigraph::complete(n)) == expected);
    }

    // brute-force coloring oracle on the triangle
    PolyInK c3 = chromatic(Multigraph::cycle(3));
    for (int colors = 0; colors <= 4; ++colors) {
        CHECK(c3.eval(Rational(colors)) ==
              Rational(oracles::count_proper_colorings(Multigraph::cycle(3), colors)));
    }
    CHECK(c3 == k * k * k - Rational(3) * (k * k) + Rational(2) * k);
}

TEST_CASE("engine agrees with counting oracles") {
    for (const Multigraph& g : simple_graph_corpus(4)) {
        BivarPoly t = tutte(g);
        CHECK(t.eval(Rational(2), Rational(0)) ==
              Rational(static_cast<int64_t>(acyclic_orientations_bruteforce(g).size())));
        if (g.components() == 1) {
            CHECK(t.eval(Rational(1), Rational(1)) ==
                  Rational(oracles::spanning_trees_bruteforce(g)));
        }
    }
}

TEST_CASE("cache can be disabled and results do not change") {
    TutteCache& cache = TutteCache::instance();
    Multigraph g = Multigraph::cycle(5);
    BivarPoly with_cache = tutte(g);
    bool was_enabled = cache.enabled();
    cache.set_enabled(false);
    BivarPoly without_cache = tutte(g);
    cache.set_enabled(was_enabled);
    CHECK(with_cache == without_cache);
}

TEST_CASE("cache is safe under concurrent use") {
    TutteCache::instance().clear();
    std::vector<std::thread> threads;
    std::vector<BivarPoly> results(8);
    for (int i = 0; i < 8; ++i) {
        threads.emplace_back([i, &results] { results[i] = tutte(Multigraph::complete(5)); });
    }
    for (auto& t : threads) t.join();
    for (int i = 1; i < 8; ++i) CHECK(results[i] == results[0]);
}

TEST_CASE("coboundary identity on named instances") {
    // K_2 at t=3, k=2: both sides evaluate to 8.
    Rational lhs = convolution_power_rho(Multigraph::complete(2), Rational(3), Rational(3), 2);
    Rational rhs = Rational(2) * Rational(2) *
                   tutte(Multigraph::complete(2)).eval(Rational(2), Rational(3));
    CHECK(lhs == Rational(8));
    CHECK(lhs == rhs);

    // edgeless graphs give k^n on both sides
    CHECK(coboundary_check(Multigraph(3), {Rational(-1), Rational(0), Rational(2), Rational(3)},
                           {1, 2, 3, 4}));
    CHECK(coboundary_check(Multigraph::cycle(4),
                           {Rational(-1), Rational(0), Rational(2), Rational(3)}, {1, 2, 3, 4}));
    CHECK_THROWS_AS(coboundary_check(Multigraph(1), {Rational(1)}, {1}), std::invalid_argument);
}

TEST_CASE("two-formula example: tau_{2,2}^2(K_3) = 2 T(3,2) = 28") {
    Multigraph k3 = Multigraph::complete(3);
    Character tau22 = tau_char(Rational(2), Rational(2));
    Rational lhs = convolution_power_value(tau22, 2, k3);
    CHECK(lhs == Rational(28));
    CHECK(tutte(k3).eval(Rational(3), Rational(2)) == Rational(14));
}

TEST_CASE("tutte-char identity on a couple of graphs") {
    std::vector<Rational> xs{Rational(-1), Rational(0), Rational(2), Rational(3)};
    std::vector<Rational> ys{Rational(-1), Rational(0), Rational(2)};
    std::vector<int64_t> ks{-2, -1, 0, 1, 2, 3};
    CHECK(tutte_char_identity_check(Multigraph::complete(3), xs, ys, ks));
    CHECK(tutte_char_identity_check(Multigraph::cycle(4), xs, ys, ks));
    CHECK(tutte_char_identity_check(disjoint_union(Multigraph::complete(2), Multigraph(1)), xs,
                                    ys, ks));
}

TEST_CASE("T(3,2) subset sum on tiny graphs") {
    auto [t_k3, s_k3] = t32_identity(Multigraph::complete(3));
    CHECK(t_k3 == Rational(14));
    CHECK(s_k3 == Rational(14));

    auto [t_k2, s_k2] = t32_identity(Multigraph::complete(2));
    CHECK(t_k2 == Rational(3));
    CHECK(s_k2 == Rational(3));

    auto [t_k1, s_k1] = t32_identity(Multigraph(1));
    CHECK(t_k1 == Rational(1));
    CHECK(s_k1 == Rational(1));

    CHECK_THROWS_AS(t32_identity(Multigraph(2)), std::invalid_argument);
}

TEST_CASE("complete-graph power identities") {
    CHECK(tutte(Multigraph::complete(3)).eval(Rational(3), Rational(0)) == Rational(12));
    CHECK(kn_power_identities(3, 2, Rational(0)));
    CHECK(kn_power_identities(3, 2, Rational(2)));
    CHECK(kn_power_identities(1, 1, Rational(5)));
    CHECK(kn_power_identities(5, 3, Rational(2)));
}

TEST_CASE("recovering T from convolution powers") {
    CHECK(tutte_from_P(Multigraph::complete(2), {3}, {Rational(0)}));
    CHECK(tutte_from_P(Multigraph(1), {-2, -1, 0, 2, 3}, {Rational(-1), Rational(2)}));
    CHECK(tutte_from_P(Multigraph::cycle(3), {-1}, {Rational(2)}));
    CHECK(tutte_from_P(Multigraph::cycle(4), {-2, 0, 2, 3}, {Rational(-1), Rational(0), Rational(2)}));
}

TEST_CASE("cached values equal fresh recomputation") {
    TutteCache& cache = TutteCache::instance();
    cache.clear();
    Multigraph g = disjoint_union(Multigraph::cycle(4), Multigraph::complete(3));
    BivarPoly first = tutte(g);
    CHECK(cache.size() > 0);
    auto hit = cache.lookup(canonical_key(Multigraph::cycle(4)));
    REQUIRE(hit.has_value());
    cache.clear();
    CHECK(*hit == tutte(Multigraph::cycle(4)));
    CHECK(first == tutte(g));
}
