#include "covertroute/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace covertroute {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

double link_cost(double omega, Regime regime) {
    switch (regime) {
    case Regime::MtSk: return omega;
    case Regime::MdSk: return std::sqrt(omega);
    case Regime::MtIk: return omega * omega;
    case Regime::MdIk: return std::cbrt(omega * omega);
    }
    return omega;
}

CostedGraph build_graph(const Scenario& s, Regime regime) {
    s.validate();
    CostedGraph g;
    g.n = s.nodes.size();
    g.cost.assign(g.n * g.n, kInf);
    for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = 0; j < g.n; ++j) {
            if (i == j) continue;
            const double omega =
                link_exposure(s, s.nodes[i].id, s.nodes[j].id);
            g.cost[i * g.n + j] = link_cost(omega, regime);
        }
    }
    return g;
}

namespace {

struct Label {
    double cost = 0.0;
    std::size_t hops = 0;
    std::vector<std::size_t> seq;

    bool operator<(const Label& o) const {
        if (cost != o.cost) return cost < o.cost;
        if (hops != o.hops) return hops < o.hops;
        return seq < o.seq;
    }
};

} // namespace

std::pair<std::vector<std::size_t>, double>
shortest_path(const CostedGraph& g, std::size_t src, std::size_t dst) {
    if (src >= g.n || dst >= g.n || src == dst)
        throw ValidationError("shortest_path: bad src/dst");

    // Label-setting Dijkstra over composite keys (cost, hops, sequence).
    // Extending two labels of the same node by the same edge preserves their
    // order, so settling by minimum label is optimal for every component.
    std::vector<bool> settled(g.n, false);
    auto cmp = [](const std::pair<Label, std::size_t>& a,
                  const std::pair<Label, std::size_t>& b) {
        return b.first < a.first;
    };
    std::priority_queue<std::pair<Label, std::size_t>,
                        std::vector<std::pair<Label, std::size_t>>,
                        decltype(cmp)>
        heap(cmp);
    heap.push({Label{0.0, 0, {src}}, src});

    while (!heap.empty()) {
        auto [label, v] = heap.top();
        heap.pop();
        if (settled[v]) continue;
        settled[v] = true;
        if (v == dst) return {label.seq, label.cost};

        for (std::size_t u = 0; u < g.n; ++u) {
            // src and dst act as endpoints only.
            if (settled[u] || u == src) continue;
            const double w = g.at(v, u);
            if (std::isinf(w)) continue;
            Label next{label.cost + w, label.hops + 1, label.seq};
            next.seq.push_back(u);
            heap.push({std::move(next), u});
        }
    }
    throw NoRouteError("destination unreachable (all routes have infinite cost)");
}

namespace {

Path to_path(const Scenario& s, const std::vector<std::size_t>& idx_seq) {
    Path p;
    p.nodes.reserve(idx_seq.size());
    for (std::size_t i : idx_seq) p.nodes.push_back(s.nodes[i].id);
    return p;
}

} // namespace

RouteResult route(const Scenario& s, const CovertBudget& b, Regime regime) {
    const CostedGraph g = build_graph(s, regime);
    auto [seq, cost] = shortest_path(g, s.index_of(s.source), s.index_of(s.dest));
    RouteResult r;
    r.regime = regime;
    r.path = to_path(s, seq);
    r.path_cost = cost;
    r.plan = allocate(regime, r.path, s, b);
    return r;
}

BruteForceResult brute_force_route(const Scenario& s, const CovertBudget& b,
                                   Regime regime) {
    s.validate();
    if (s.nodes.size() > 12)
        throw ValidationError("brute_force_route: scenario exceeds 12 nodes");

    const CostedGraph g = build_graph(s, regime);
    const std::size_t src = s.index_of(s.source);
    const std::size_t dst = s.index_of(s.dest);
    const bool mt = is_mt(regime);

    BruteForceResult result;
    Label best_label{kInf, 0, {}};
    double best_metric = mt ? -kInf : kInf;
    std::vector<std::size_t> best_metric_seq;

    std::vector<bool> used(g.n, false);
    std::vector<std::size_t> seq{src};
    used[src] = true;

    auto consider = [&](double cost) {
        ++result.paths_enumerated;
        Label label{cost, seq.size() - 1, seq};
        if (label < best_label) best_label = label;

        Path p = to_path(s, seq);
        try {
            PathPlan plan = allocate(regime, p, s, b);
            const double metric = plan.unconstrained
                                      ? (mt ? kInf : 0.0)
                                      : (mt ? plan.rate_coeff : plan.delay_total);
            if (mt ? metric > best_metric : metric < best_metric) {
                best_metric = metric;
                best_metric_seq = seq;
            }
        } catch (const InfeasibleLinkError&) {
            // unusable path, not a metric candidate
        }
    };

    auto dfs = [&](auto&& self, std::size_t v, double cost) -> void {
        for (std::size_t u = 0; u < g.n; ++u) {
            if (used[u] || u == src) continue;
            const double w = g.at(v, u);
            if (std::isinf(w)) continue;
            seq.push_back(u);
            if (u == dst) {
                consider(cost + w);
            } else {
                used[u] = true;
                self(self, u, cost + w);
                used[u] = false;
            }
            seq.pop_back();
        }
    };
    dfs(dfs, src, 0.0);

    if (best_label.seq.empty())
        throw NoRouteError("brute_force_route: destination unreachable");

    result.min_cost.regime = regime;
    result.min_cost.path = to_path(s, best_label.seq);
    result.min_cost.path_cost = best_label.cost;
    result.min_cost.plan = allocate(regime, result.min_cost.path, s, b);
    result.best_metric_path = to_path(s, best_metric_seq);
    result.best_metric = best_metric;
    return result;
}

} // namespace covertroute
