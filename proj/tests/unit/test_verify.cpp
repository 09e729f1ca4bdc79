#include <doctest.h>

#include <stdexcept>

#include "hopfgraph/verify.hpp"

using namespace hopfgraph;

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 16);
    CHECK(names.front() == "antipode");
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("a cheap suite runs green and reports per-identity checks") {
    SuiteReport report = run_suite("cycles");
    CHECK(report.suite == "cycles");
    CHECK(report.checks.size() == 6);
    CHECK(report.passed());
    CHECK(report.failed_count() == 0);
}

TEST_CASE("random corpora are deterministic in the seed") {
    auto a = random_multigraph_corpus(20, 5, 7, 123);
    auto b = random_multigraph_corpus(20, 5, 7, 123);
    auto c = random_multigraph_corpus(20, 5, 7, 124);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("tree corpus matches the known tree counts") {
    // 1, 1, 1, 2, 3, 6, 11 isomorphism classes of trees on 1..7 vertices
    CHECK(tree_corpus(7).size() == 25);
    CHECK(tree_corpus(4).size() == 5);
}
