#include <doctest.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "hopfgraph/hopf.hpp"
#include "hopfgraph/matroid.hpp"
#include "hopfgraph/verify.hpp"

using namespace hopfgraph;

namespace {

GraphSum basis_of(const Multigraph& g) { return GraphSum::basis(g); }

const Multigraph kEdgelessPair(2);

// Ordered set partitions of V(g) weighted by weight(#blocks); used to probe
// readings of the ordered-partition antipode sum.
GraphSum ordered_partition_sum(const Multigraph& g,
                               const std::function<Rational(int)>& weight) {
    GraphSum out;
    int n = g.vertex_count();
    std::function<void(uint64_t, int, const Multigraph&)> rec =
        [&](uint64_t remaining, int blocks, const Multigraph& partial) {
            if (remaining == 0) {
                out += weight(blocks) * basis_of(partial);
                return;
            }
            for (uint64_t sub = remaining;; sub = (sub - 1) & remaining) {
                if (sub != 0) rec(remaining & ~sub, blocks + 1, disjoint_union(partial, g.induced(sub)));
                if (sub == 0) break;
            }
        };
    rec((uint64_t(1) << n) - 1, 0, Multigraph());
    return out;
}

}  // namespace

TEST_CASE("product: unit, small cases, bilinearity") {
    Multigraph k1(1);
    CHECK(GraphSum::unit() * basis_of(k1) == basis_of(k1));
    CHECK(basis_of(k1) * basis_of(k1) == basis_of(kEdgelessPair));

    GraphSum two_k1 = Rational(2) * basis_of(k1);
    GraphSum three_k2 = Rational(3) * basis_of(Multigraph::complete(2));
    GraphSum expected =
        Rational(6) * basis_of(disjoint_union(k1, Multigraph::complete(2)));
    CHECK(two_k1 * three_k2 == expected);
}

TEST_CASE("coproduct enumerates vertex subsets") {
    auto k0_terms = coproduct(Multigraph());
    REQUIRE(k0_terms.size() == 1);
    CHECK(k0_terms[0].multiplicity == 1);
    CHECK(k0_terms[0].left == canonical_key(Multigraph()));

    auto k1_terms = coproduct(Multigraph(1));
    CHECK(k1_terms.size() == 2);

    auto k2_terms = coproduct(Multigraph::complete(2));
    REQUIRE(k2_terms.size() == 3);
    std::map<std::pair<CanonicalKey, CanonicalKey>, int64_t> seen;
    for (const auto& t : k2_terms) seen[{t.left, t.right}] = t.multiplicity;
    CanonicalKey k0 = canonical_key(Multigraph());
    CanonicalKey k1 = canonical_key(Multigraph(1));
    CanonicalKey k2 = canonical_key(Multigraph::complete(2));
    CHECK(seen[{k0, k2}] == 1);
    CHECK(seen[{k1, k1}] == 2);
    CHECK(seen[{k2, k0}] == 1);
}

TEST_CASE("coproduct multiplicities sum to 2^n and are cocommutative") {
    for (const Multigraph& g : simple_graph_corpus(4)) {
        int64_t total = 0;
        std::map<std::pair<CanonicalKey, CanonicalKey>, int64_t> forward, swapped;
        for (const auto& t : coproduct(g)) {
            total += t.multiplicity;
            forward[{t.left, t.right}] += t.multiplicity;
            swapped[{t.right, t.left}] += t.multiplicity;
        }
        CHECK(total == int64_t(1) << g.vertex_count());
        CHECK(forward == swapped);
    }
}

TEST_CASE("counit picks the K_0 coefficient") {
    CHECK(counit(GraphSum::unit()) == Rational(1));
    CHECK(counit(basis_of(Multigraph::complete(5))) == Rational(0));
    GraphSum mix = Rational(3) * GraphSum::unit() - Rational(2) * basis_of(Multigraph(1));
    CHECK(counit(mix) == Rational(3));
}

TEST_CASE("antipode of tiny graphs") {
    CHECK(antipode_flats(Multigraph()) == GraphSum::unit());
    CHECK(antipode_flats(Multigraph(1)) == Rational(-1) * basis_of(Multigraph(1)));

    GraphSum s_k2 = antipode_flats(Multigraph::complete(2));
    GraphSum expected = Rational(2) * basis_of(kEdgelessPair) -
                        basis_of(Multigraph::complete(2));
    CHECK(s_k2 == expected);
}

TEST_CASE("ordered-partition oracle on K_1 and K_2") {
    CHECK(antipode_takeuchi(Multigraph(1)) == Rational(-1) * basis_of(Multigraph(1)));
    // three ordered partitions of a 2-set: {01}, ({0},{1}), ({1},{0})
    GraphSum expected = Rational(2) * basis_of(kEdgelessPair) -
                        basis_of(Multigraph::complete(2));
    CHECK(antipode_takeuchi(Multigraph::complete(2)) == expected);
    CHECK(antipode_takeuchi(kEdgelessPair) == basis_of(kEdgelessPair));
    CHECK_THROWS_AS(antipode_takeuchi(Multigraph(9)), std::invalid_argument);
}

TEST_CASE("a factorial weight over ordered partitions breaks the Hopf axiom") {
    // Weighted reading (-1)^b b! gives 4 [K_1 | K_1] - [K_2], whose convolution
    // against the identity does not vanish in degree 2; the unweighted ordered
    // sum is the antipode.
    Multigraph k2 = Multigraph::complete(2);
    GraphSum weighted = ordered_partition_sum(
        k2, [](int blocks) { return Rational(-1).pow(blocks) * factorial(blocks); });
    CHECK(weighted == Rational(4) * basis_of(kEdgelessPair) - basis_of(k2));

    GraphSum convolved;
    for (const SweedlerTerm& t : coproduct(k2)) {
        GraphSum left_mapped = t.left == canonical_key(k2)
                                   ? weighted
                                   : (t.left == canonical_key(Multigraph(1))
                                          ? Rational(-1) * basis_of(Multigraph(1))
                                          : GraphSum::unit());
        convolved += Rational(t.multiplicity) * (left_mapped * GraphSum::basis(t.right));
    }
    CHECK_FALSE(convolved == GraphSum());

    GraphSum unweighted = ordered_partition_sum(
        k2, [](int blocks) { return Rational(-1).pow(blocks); });
    CHECK(unweighted == antipode_flats(k2));
}

TEST_CASE("hopf axiom and involution on small graphs") {
    CHECK(hopf_axiom_check(Multigraph()));
    CHECK(hopf_axiom_check(Multigraph::complete(2)));
    CHECK(antipode_linear(antipode_flats(Multigraph::complete(2))) ==
          basis_of(Multigraph::complete(2)));
}

TEST_CASE("flats formula equals the oracle beyond the corpus") {
    // multigraphs with loops and parallel edges
    std::vector<Multigraph> zoo{
        Multigraph(1, {{0, 0}}),
        Multigraph(2, {{0, 1}, {0, 1}}),
        Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}}),
        Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}),
        disjoint_union(Multigraph::cycle(3), Multigraph(1, {{0, 0}})),
    };
    for (const Multigraph& g : zoo) {
        CHECK(antipode_flats(g) == antipode_takeuchi(g));
        CHECK(hopf_axiom_check(g));
    }
}

TEST_CASE("hopf axiom on seeded random multigraphs with up to 6 vertices") {
    for (const Multigraph& g : random_multigraph_corpus(40, 6, 8, 99)) {
        CHECK(hopf_axiom_check(g));
    }
}

TEST_CASE("antipode grading and sign pattern") {
    for (const Multigraph& g : simple_graph_corpus(4)) {
        int n = g.vertex_count();
        GraphSum s = antipode_flats(g);
        for (const auto& [key, coeff] : s.terms()) {
            CHECK(key.graph_vertex_count() == n);
            Multigraph rep = key.to_multigraph();
            Rational sign = Rational(-1).pow(n - rep.rank());
            CHECK(coeff * sign > Rational(0));
        }
    }
}

TEST_CASE("coproduct is coassociative") {
    for (const Multigraph& g : simple_graph_corpus(4)) {
        std::map<std::tuple<CanonicalKey, CanonicalKey, CanonicalKey>, int64_t> left, right;
        for (const auto& t : coproduct(g)) {
            for (const auto& inner : coproduct(t.left.to_multigraph())) {
                left[{inner.left, inner.right, t.right}] += t.multiplicity * inner.multiplicity;
            }
            for (const auto& inner : coproduct(t.right.to_multigraph())) {
                right[{t.left, inner.left, inner.right}] += t.multiplicity * inner.multiplicity;
            }
        }
        CHECK(left == right);
    }
}

TEST_CASE("graph sum component extraction") {
    GraphSum s = basis_of(Multigraph(1)) + basis_of(Multigraph::complete(3));
    CHECK(s.component(1) == basis_of(Multigraph(1)));
    CHECK(s.component(3) == basis_of(Multigraph::complete(3)));
    CHECK(s.component(2).is_zero());
}

TEST_CASE("graph sum algebra laws, spot-checked") {
    GraphSum a = basis_of(Multigraph(1));
    GraphSum b = Rational(3, 2) * basis_of(Multigraph::complete(2));
    GraphSum c = basis_of(Multigraph::cycle(3)) - Rational(2) * basis_of(Multigraph(2));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(Rational(2) * (a + b) == Rational(2) * a + Rational(2) * b);
    CHECK((Rational(0) * a).is_zero());
}

TEST_CASE("oracle equality holds at six vertices too") {
    for (const Multigraph& g : {Multigraph::cycle(6), Multigraph::complete(6),
                                disjoint_union(Multigraph::cycle(3), Multigraph::path(3))}) {
        CHECK(antipode_flats(g) == antipode_takeuchi(g));
    }
}
