#include "covertroute/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <thread>

#include "covertroute/random.hpp"

namespace covertroute {

const char* axis_name(SweepAxis a) {
    switch (a) {
    case SweepAxis::Delta: return "delta";
    case SweepAxis::Nodes: return "n_nodes";
    case SweepAxis::Wardens: return "n_wardens";
    case SweepAxis::Alpha: return "alpha";
    }
    return "?";
}

SweepAxis axis_from_name(const std::string& s) {
    if (s == "delta") return SweepAxis::Delta;
    if (s == "n_nodes") return SweepAxis::Nodes;
    if (s == "n_wardens") return SweepAxis::Wardens;
    if (s == "alpha") return SweepAxis::Alpha;
    throw ValidationError("unknown sweep axis: " + s);
}

void SweepSpec::validate() const {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    if (values.empty()) throw ValidationError("sweep values must be nonempty");
    if (!std::is_sorted(values.begin(), values.end()))
        throw ValidationError("sweep values must be sorted ascending");
    if (regimes.empty()) throw ValidationError("regime set must be nonempty");
    if (jobs < 1) throw ValidationError("jobs must be >= 1");
}

std::uint64_t SweepSpec::trial_seed(int t, std::size_t value_index) const {
    const std::uint64_t paired = base_seed + static_cast<std::uint64_t>(t);
    if (nested) return paired;
    // Independent draws: decorrelate placements across axis values.
    return derive_seed(paired, 0x1000 + value_index);
}

double SweepSpec::trial_delta(std::size_t value_index) const {
    return axis == SweepAxis::Delta ? values[value_index] : delta;
}

Scenario SweepSpec::trial_scenario(int t, std::size_t value_index) const {
    const double v = values[value_index];
    int nodes = n_nodes;
    int wardens = n_wardens;
    double a = alpha;
    switch (axis) {
    case SweepAxis::Delta: break;
    case SweepAxis::Nodes: nodes = static_cast<int>(v); break;
    case SweepAxis::Wardens: wardens = static_cast<int>(v); break;
    case SweepAxis::Alpha: a = v; break;
    }
    return generate_random(trial_seed(t, value_index), nodes, wardens,
                           dimension, a, node_noise, warden_noise);
}

ExperimentResult run_sweep(const SweepSpec& spec) {
    spec.validate();

    ExperimentResult result;
    result.spec = spec;
    const std::size_t n_values = spec.values.size();
    const std::size_t n_regimes = spec.regimes.size();
    result.rows.resize(n_values * static_cast<std::size_t>(spec.trials) *
                       n_regimes);

    // One work item per (value, trial); each worker writes disjoint row
    // slots, so scheduling cannot affect the output.
    const std::size_t n_items = n_values * static_cast<std::size_t>(spec.trials);
    std::atomic<std::size_t> cursor{0};
    std::atomic<int> failures{0};

    auto work = [&]() {
        for (;;) {
            const std::size_t item = cursor.fetch_add(1);
            if (item >= n_items) return;
            const std::size_t vi = item / spec.trials;
            const int t = static_cast<int>(item % spec.trials);

            const std::uint64_t seed = spec.trial_seed(t, vi);
            Scenario scenario;
            std::string gen_error;
            try {
                scenario = spec.trial_scenario(t, vi);
            } catch (const std::exception& e) {
                gen_error = e.what();
            }
            const CovertBudget budget(spec.trial_delta(vi));

            for (std::size_t ri = 0; ri < n_regimes; ++ri) {
                TrialRecord& row =
                    result.rows[(vi * spec.trials + t) * n_regimes + ri];
                row.axis_value = spec.values[vi];
                row.regime = spec.regimes[ri];
                row.trial = t;
                row.seed = seed;
                if (!gen_error.empty()) {
                    row.failed = true;
                    row.error = gen_error;
                    failures.fetch_add(1);
                    continue;
                }
                try {
                    const RouteResult r = route(scenario, budget, spec.regimes[ri]);
                    if (r.plan.unconstrained) {
                        row.failed = true;
                        row.error = "unconstrained (no warden exposure)";
                        failures.fetch_add(1);
                        continue;
                    }
                    row.rate_coeff = r.plan.rate_coeff;
                    row.delay_coeff = r.plan.delay_total;
                    row.path_len = static_cast<int>(r.path.hops());
                    row.path_cost = r.path_cost;
                } catch (const std::exception& e) {
                    row.failed = true;
                    row.error = e.what();
                    failures.fetch_add(1);
                }
            }
        }
    };

    const int jobs = std::min<std::size_t>(spec.jobs, n_items);
    if (jobs <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    result.failed_trials = failures.load();
    return result;
}

std::vector<SummaryRow> summarize(const ExperimentResult& result) {
    const auto& spec = result.spec;
    std::vector<SummaryRow> rows;
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        for (std::size_t ri = 0; ri < spec.regimes.size(); ++ri) {
            SummaryRow s;
            s.axis_value = spec.values[vi];
            s.regime = spec.regimes[ri];
            std::vector<double> rates, delays;
            for (int t = 0; t < spec.trials; ++t) {
                const TrialRecord& row =
                    result.rows[(vi * spec.trials + t) * spec.regimes.size() + ri];
                if (row.failed) continue;
                rates.push_back(row.rate_coeff);
                delays.push_back(row.delay_coeff);
            }
            s.trials = static_cast<int>(rates.size());
            auto mean_of = [](const std::vector<double>& xs) {
                double m = 0.0;
                for (double x : xs) m += x;
                return xs.empty() ? 0.0 : m / static_cast<double>(xs.size());
            };
            auto stderr_of = [](const std::vector<double>& xs, double mean) {
                if (xs.size() < 2) return 0.0;
                double ss = 0.0;
                for (double x : xs) ss += (x - mean) * (x - mean);
                const double var = ss / static_cast<double>(xs.size() - 1);
                return std::sqrt(var / static_cast<double>(xs.size()));
            };
            s.mean_rate = mean_of(rates);
            s.mean_delay = mean_of(delays);
            s.stderr_rate = stderr_of(rates, s.mean_rate);
            s.stderr_delay = stderr_of(delays, s.mean_delay);
            rows.push_back(s);
        }
    }
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_raw_csv(std::ostream& out, const ExperimentResult& result) {
    out << "axis,axis_value,regime,trial,seed,rate_coeff,delay_coeff,path_len,"
           "path_cost\n";
    const char* axis = axis_name(result.spec.axis);
    for (const auto& row : result.rows) {
        out << axis << ',' << format_double(row.axis_value) << ','
            << regime_name(row.regime) << ',' << row.trial << ',' << row.seed
            << ',';
        if (row.failed) {
            out << "nan,nan,0,nan\n";
        } else {
            out << format_double(row.rate_coeff) << ','
                << format_double(row.delay_coeff) << ',' << row.path_len << ','
                << format_double(row.path_cost) << '\n';
        }
    }
}

void write_summary_csv(std::ostream& out, const ExperimentResult& result) {
    out << "axis,axis_value,regime,mean_rate_coeff,mean_delay_coeff,"
           "stderr_rate,stderr_delay,trials\n";
    const char* axis = axis_name(result.spec.axis);
    for (const auto& row : summarize(result)) {
        out << axis << ',' << format_double(row.axis_value) << ','
            << regime_name(row.regime) << ',' << format_double(row.mean_rate)
            << ',' << format_double(row.mean_delay) << ','
            << format_double(row.stderr_rate) << ','
            << format_double(row.stderr_delay) << ',' << row.trials << '\n';
    }
}

} // namespace covertroute
