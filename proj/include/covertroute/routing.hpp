#pragma once

#include <utility>
#include <vector>

#include "covertroute/allocation.hpp"

namespace covertroute {

// Fully connected directed link graph with regime-specific costs. Entry
// (i, j) uses node index order of the scenario, not node ids.
struct CostedGraph {
    std::size_t n = 0;
    std::vector<double> cost; // n*n row-major; +inf on diagonal and unusable links

    double at(std::size_t i, std::size_t j) const { return cost[i * n + j]; }
};

// Regime-specific link cost as a power of the warden exposure:
// omega (MT-SK), sqrt(omega) (MD-SK), omega^2 (MT-IK), omega^(2/3) (MD-IK).
double link_cost(double omega, Regime regime);

CostedGraph build_graph(const Scenario& s, Regime regime);

class NoRouteError : public std::runtime_error {
public:
    explicit NoRouteError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dijkstra over node indices. Ties broken by fewer hops, then
// lexicographically smallest index sequence. Intermediate hops never pass
// through src or dst. Throws NoRouteError when dst is unreachable.
std::pair<std::vector<std::size_t>, double>
shortest_path(const CostedGraph& g, std::size_t src, std::size_t dst);

struct RouteResult {
    Regime regime = Regime::MtSk;
    Path path;
    double path_cost = 0.0;
    PathPlan plan;
};

RouteResult route(const Scenario& s, const CovertBudget& b, Regime regime);

// Exhaustive simple-path enumeration oracle; scenarios up to 12 nodes. The
// returned path minimizes the additive cost; best_metric_path optimizes the
// closed-form end-to-end objective directly (these must coincide).
struct BruteForceResult {
    RouteResult min_cost;
    Path best_metric_path;
    double best_metric = 0.0; // rate for MT, delay for MD
    std::size_t paths_enumerated = 0;
};

BruteForceResult brute_force_route(const Scenario& s, const CovertBudget& b,
                                   Regime regime);

} // namespace covertroute
