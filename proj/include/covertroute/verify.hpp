#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "covertroute/routing.hpp"

namespace covertroute {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int cases = 50;
    int size_cap = 8; // total nodes handed to the brute-force enumerator
    // Test hook: added to the Dijkstra path cost before comparison, to prove
    // the suite detects a broken router.
    double cost_perturbation = 0.0;
};

struct SuiteReport {
    std::string name;
    int cases = 0;
    bool passed = true;
    std::string detail; // offending scenario seed and values on failure
};

// The three randomized oracle suites: Dijkstra vs exhaustive enumeration,
// closed-form allocations vs the numeric optimizer, and exact relative
// entropy vs the dense Gaussian oracle.
std::vector<SuiteReport> run_verification(const VerifyOptions& opts);

} // namespace covertroute
