#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dompoly/graph.hpp"

namespace dompoly {

struct SuiteResult {
    std::string name;
    bool passed = false;
    long checks = 0;
    std::string detail;  // summary, or the first counterexample
};

struct SuiteOptions {
    std::optional<std::pair<int, int>> range;  // overrides the suite's main loop
};

/// name in {coeffs, minus1, minus2, ord3, table1, theorem}; "all" via
/// run_suites. Fixed RNG seeds, so results are reproducible.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});
std::vector<SuiteResult> run_suites(const std::string& name, const SuiteOptions& opts = {});

/// Random graphs of order 2..max_order with no isolated vertices and no
/// K_2 components. Deterministic for a given seed.
std::vector<Graph> random_hypothesis_graphs(int count, int max_order, unsigned seed);

/// Random unions of paths, cycles, spiders, pendant cycles and tilde
/// paths: every non-stem vertex has degree <= 2, no isolated vertices,
/// no K_2 components, order <= max_order.
std::vector<Graph> random_g2_graphs(int count, int max_order, unsigned seed);

std::vector<Graph> random_forests(int count, int max_order, unsigned seed);

}  // namespace dompoly
