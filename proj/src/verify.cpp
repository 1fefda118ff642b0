#include "covertroute/verify.hpp"

#include <cmath>
#include <sstream>

#include "covertroute/random.hpp"

namespace covertroute {

namespace {

const std::vector<Regime> kAllRegimes{Regime::MtSk, Regime::MdSk, Regime::MtIk,
                                      Regime::MdIk};

double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

SuiteReport routing_suite(const VerifyOptions& opts) {
    SuiteReport report{"routing (Dijkstra vs enumeration)", opts.cases};
    for (int c = 0; c < opts.cases && report.passed; ++c) {
        const std::uint64_t seed = derive_seed(opts.seed, 100 + c);
        Xoshiro256StarStar rng(seed);
        const int relays =
            static_cast<int>(rng.uniform(0.0, static_cast<double>(opts.size_cap - 1)));
        const int wardens = 1 + static_cast<int>(rng.uniform(0.0, 5.0));
        const Scenario s = generate_random(seed, relays, wardens, 100.0,
                                           2.0 + rng.uniform(0.0, 2.0), 1.0, 1.0);
        const CovertBudget budget(0.05);
        for (Regime regime : kAllRegimes) {
            const RouteResult fast = route(s, budget, regime);
            const BruteForceResult slow = brute_force_route(s, budget, regime);
            const double fast_cost = fast.path_cost + opts.cost_perturbation;
            // The min-cost path must also optimize the closed-form end-to-end
            // metric among all enumerated paths (up to rounding ties).
            const double cost_metric = is_mt(regime)
                                           ? slow.min_cost.plan.rate_coeff
                                           : slow.min_cost.plan.delay_total;
            if (rel_diff(fast_cost, slow.min_cost.path_cost) > 1e-12 ||
                fast.path.nodes != slow.min_cost.path.nodes ||
                rel_diff(cost_metric, slow.best_metric) > 1e-9) {
                std::ostringstream msg;
                msg << "seed=" << seed << " regime=" << regime_name(regime)
                    << " dijkstra_cost=" << fast_cost
                    << " brute_cost=" << slow.min_cost.path_cost;
                report.passed = false;
                report.detail = msg.str();
                break;
            }
        }
    }
    return report;
}

SuiteReport allocation_suite(const VerifyOptions& opts) {
    SuiteReport report{"allocation (closed form vs numeric oracle)", opts.cases};
    for (int c = 0; c < opts.cases && report.passed; ++c) {
        const std::uint64_t seed = derive_seed(opts.seed, 200 + c);
        Xoshiro256StarStar rng(seed);
        const int hops = 1 + static_cast<int>(rng.uniform(0.0, 6.0));
        std::vector<LinkParams> links(hops);
        for (auto& l : links) {
            l.omega = std::pow(10.0, rng.uniform(-3.0, 3.0));
            l.gain = std::pow(10.0, rng.uniform(-2.0, 2.0));
        }
        const CovertBudget budget(std::pow(10.0, rng.uniform(-2.0, 0.0)));
        for (Regime regime : kAllRegimes) {
            const PathPlan closed = allocate_closed_form(regime, links, budget);
            const PathPlan numeric = allocate_numeric_oracle(regime, links, budget);
            const double a = is_mt(regime) ? closed.rate_coeff : closed.delay_total;
            const double b = is_mt(regime) ? numeric.rate_coeff : numeric.delay_total;
            if (rel_diff(a, b) > 1e-6) {
                std::ostringstream msg;
                msg << "seed=" << seed << " regime=" << regime_name(regime)
                    << " closed=" << a << " numeric=" << b;
                report.passed = false;
                report.detail = msg.str();
                break;
            }
        }
    }
    return report;
}

SuiteReport kl_suite(const VerifyOptions& opts) {
    SuiteReport report{"relative entropy (closed form vs Gaussian oracle)",
                       opts.cases};
    for (int c = 0; c < opts.cases && report.passed; ++c) {
        const std::uint64_t seed = derive_seed(opts.seed, 300 + c);
        Xoshiro256StarStar rng(seed);
        const int hops = 1 + static_cast<int>(rng.uniform(0.0, 5.0));
        const int wardens = 1 + static_cast<int>(rng.uniform(0.0, 5.0));
        const Scenario s = generate_random(seed, hops - 1, wardens, 50.0, 2.0,
                                           rng.uniform(0.5, 2.0),
                                           rng.uniform(0.5, 2.0));
        // A fixed path through every relay in id order.
        Path path;
        path.nodes.push_back(s.source);
        for (const auto& node : s.nodes)
            if (node.id != s.source && node.id != s.dest)
                path.nodes.push_back(node.id);
        path.nodes.push_back(s.dest);

        // Moderate blocklength keeps the divergence away from the
        // cancellation-dominated regime the log-det route cannot resolve.
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng.uniform(0.0, 16.0));
        const CovertBudget budget(rng.uniform(0.1, 2.0));
        const PathPlan plan = allocate(Regime::MtSk, path, s, budget);
        const double direct = exact_kl_sk(plan.warden_terms(n), n);

        // Appendix-style covariance assembly: each warden's noise variance is
        // repeated once per hop, and the perturbation vector carries
        // sqrt(P_i)/d_{i,k}^{alpha/2}.
        const double root_n = std::sqrt(static_cast<double>(n));
        GaussianPair pair;
        pair.replication = n;
        for (const auto& w : s.wardens) {
            for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
                const Point tx = s.node(path.nodes[i]).position;
                const double d = distance(tx, w.position);
                pair.sigma_diag.push_back(w.noise_var);
                pair.u.push_back(std::sqrt(plan.power_coeffs[i] / root_n) /
                                 std::pow(d, s.alpha / 2.0));
            }
        }
        const double oracle = kl_gaussian_oracle(pair);
        if (rel_diff(direct, oracle) > 1e-10) {
            std::ostringstream msg;
            msg << "seed=" << seed << " exact=" << direct << " oracle=" << oracle;
            report.passed = false;
            report.detail = msg.str();
        }
    }
    return report;
}

} // namespace

std::vector<SuiteReport> run_verification(const VerifyOptions& opts) {
    if (opts.size_cap > 12)
        throw ValidationError("size-cap must be <= 12");
    if (opts.size_cap < 2)
        throw ValidationError("size-cap must be >= 2");
    return {routing_suite(opts), allocation_suite(opts), kl_suite(opts)};
}

} // namespace covertroute
