#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfgraph/multigraph.hpp"

namespace hopfgraph {

/// Seed for sampled corpora; fixed so verification reports are reproducible.
inline constexpr uint64_t kDefaultSeed = 1729;

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;  // first counterexample / mismatching values when failing
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const;
    int failed_count() const;
};

struct VerifyOptions {
    uint64_t seed = kDefaultSeed;
    int jobs = 1;
    std::vector<int64_t> k_grid;  // overrides the default k grid where one applies
};

/// Registered suite names, in report order.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts = {});

/// Runs every suite (optionally fanned out over opts.jobs threads);
/// results come back in registry order regardless of scheduling.
std::vector<SuiteReport> run_all_suites(const VerifyOptions& opts = {});

// --- corpora -----------------------------------------------------------------

/// Isomorphism classes of simple graphs with 1..max_n vertices, as canonical
/// representatives in canonical-key order (52 classes for max_n = 5).
std::vector<Multigraph> simple_graph_corpus(int max_n);

/// Seeded random multigraphs with 1..max_n vertices and up to max_e edges
/// (loops and parallel edges allowed).
std::vector<Multigraph> random_multigraph_corpus(int count, int max_n, int max_e, uint64_t seed);

/// Isomorphism classes of trees with 1..max_n vertices.
std::vector<Multigraph> tree_corpus(int max_n);

}  // namespace hopfgraph
