#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "covertroute/routing.hpp"

namespace covertroute {

enum class SweepAxis { Delta, Nodes, Wardens, Alpha };

const char* axis_name(SweepAxis a); // "delta", "n_nodes", "n_wardens", "alpha"
SweepAxis axis_from_name(const std::string& s);

struct SweepSpec {
    // Fixed base parameters.
    double dimension = 100.0;
    double alpha = 2.0;
    double node_noise = 1.0;
    double warden_noise = 1.0;
    int n_nodes = 30;
    int n_wardens = 30;
    double delta = 0.05;

    SweepAxis axis = SweepAxis::Delta;
    std::vector<double> values; // nonempty, sorted ascending

    int trials = 1;
    std::uint64_t base_seed = 1;
    std::vector<Regime> regimes{Regime::MtSk, Regime::MdSk, Regime::MtIk,
                                Regime::MdIk};

    // Count sweeps reuse draw prefixes per seed (value v uses the first v
    // draws of the stream), so per-trial monotonicity holds. When false, each
    // axis value redraws placements independently.
    bool nested = true;
    int jobs = 1;

    void validate() const;
    // Placement seed and scenario for trial t at axis value index vi. Trial t
    // uses seed base_seed + t at every axis value (paired design).
    std::uint64_t trial_seed(int t, std::size_t value_index) const;
    Scenario trial_scenario(int t, std::size_t value_index) const;
    double trial_delta(std::size_t value_index) const;
};

struct TrialRecord {
    double axis_value = 0.0;
    Regime regime = Regime::MtSk;
    int trial = 0;
    std::uint64_t seed = 0;
    double rate_coeff = 0.0;
    double delay_coeff = 0.0;
    int path_len = 0; // hop count
    double path_cost = 0.0;
    bool failed = false;
    std::string error;
};

struct ExperimentResult {
    SweepSpec spec;
    std::vector<TrialRecord> rows; // values x trials x regimes, in order
    int failed_trials = 0;
};

ExperimentResult run_sweep(const SweepSpec& spec);

struct SummaryRow {
    double axis_value = 0.0;
    Regime regime = Regime::MtSk;
    double mean_rate = 0.0;
    double mean_delay = 0.0;
    double stderr_rate = 0.0;
    double stderr_delay = 0.0;
    int trials = 0;
};

std::vector<SummaryRow> summarize(const ExperimentResult& result);

// CSV emission; floats carry 17 significant digits so re-parsing is exact.
void write_raw_csv(std::ostream& out, const ExperimentResult& result);
void write_summary_csv(std::ostream& out, const ExperimentResult& result);

std::string format_double(double v);

} // namespace covertroute
