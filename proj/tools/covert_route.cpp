#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covertroute/sweep.hpp"
#include "covertroute/verify.hpp"

namespace {

using namespace covertroute;

std::vector<Regime> parse_regimes(const std::string& arg) {
    if (arg == "all")
        return {Regime::MtSk, Regime::MdSk, Regime::MtIk, Regime::MdIk};
    std::vector<Regime> out;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(regime_from_name(tok));
    if (out.empty()) throw ValidationError("empty regime list");
    return out;
}

// Either a comma list ("0.01,0.02") or a linear range "lo:hi:count".
std::vector<double> parse_values(const std::string& arg) {
    std::vector<double> out;
    if (arg.find(':') != std::string::npos) {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        char c1 = 0, c2 = 0;
        std::stringstream ss(arg);
        if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' ||
            count < 1)
            throw ValidationError("bad value range: " + arg);
        for (int i = 0; i < count; ++i)
            out.push_back(count == 1 ? lo
                                     : lo + (hi - lo) * i / (count - 1.0));
        return out;
    }
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stod(tok));
    if (out.empty()) throw ValidationError("empty value list");
    return out;
}

void print_plan(std::ostream& os, const RouteResult& r, double delta,
                std::int64_t n) {
    os << "regime " << regime_name(r.regime) << "\n";
    os << "  path:";
    for (NodeId id : r.path.nodes) os << ' ' << id;
    os << "  (" << r.path.hops() << " hops)\n";
    os << "  path cost: " << format_double(r.path_cost) << "\n";
    if (r.plan.unconstrained) {
        os << "  allocation: unconstrained (no warden exposure)\n";
        return;
    }
    if (is_mt(r.regime))
        os << "  rate: " << format_double(r.plan.rate_coeff) << "/sqrt(n)\n";
    else
        os << "  delay: " << format_double(r.plan.delay_total) << "*sqrt(n)\n";
    os << "  per-link power coefficients (P_i*sqrt(n)):";
    for (double p : r.plan.power_coeffs) os << ' ' << format_double(p);
    os << "\n";
    if (n > 0) {
        const auto terms = r.plan.warden_terms(n);
        const bool sk = r.regime == Regime::MtSk || r.regime == Regime::MdSk;
        const double d = sk ? exact_kl_sk(terms, n) : exact_kl_ik(terms, n);
        os << "  exact KL at n=" << n << ": " << format_double(d)
           << (d <= delta ? " <= " : " > ") << format_double(delta) << ": "
           << (d <= delta ? "PASS" : "FAIL") << "\n";
    }
}

int default_jobs() {
    if (const char* env = std::getenv("COVERT_ROUTE_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Covert multi-hop route planner"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random scenario file");
    std::uint64_t gen_seed = 1;
    int gen_nodes = 30, gen_wardens = 30;
    double gen_dim = 100.0, gen_alpha = 2.0;
    double gen_node_noise = 1.0, gen_warden_noise = 1.0;
    std::string gen_out;
    gen->add_option("--seed", gen_seed, "Placement seed");
    gen->add_option("--nodes", gen_nodes, "Number of relay nodes");
    gen->add_option("--wardens", gen_wardens, "Number of wardens");
    gen->add_option("--dim", gen_dim, "Side length of the square area");
    gen->add_option("--alpha", gen_alpha, "Path-loss exponent (>= 2)");
    gen->add_option("--node-noise", gen_node_noise, "Receiver noise variance");
    gen->add_option("--warden-noise", gen_warden_noise, "Warden noise variance");
    gen->add_option("--out", gen_out, "Output scenario file")->required();

    // snapshot
    auto* snap = app.add_subcommand("snapshot",
                                    "Plan routes on a single scenario");
    std::string snap_file, snap_regime = "all", snap_out;
    double snap_delta = 0.05;
    std::int64_t snap_n = 0;
    snap->add_option("--scenario", snap_file, "Scenario file")->required();
    snap->add_option("--delta", snap_delta, "Covertness budget delta");
    snap->add_option("--regime", snap_regime, "mt-sk|md-sk|mt-ik|md-ik|all");
    snap->add_option("--n", snap_n, "Blocklength for exact-KL certification");
    snap->add_option("--out", snap_out, "Optional CSV output");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Seeded Monte Carlo sweep");
    SweepSpec spec;
    std::string sweep_axis = "delta", sweep_values, sweep_regimes = "all";
    std::string sweep_out;
    bool independent = false;
    int jobs = default_jobs();
    sweep->add_option("--axis", sweep_axis, "delta|n_nodes|n_wardens|alpha");
    sweep->add_option("--values", sweep_values,
                      "Comma list or lo:hi:count range")->required();
    sweep->add_option("--trials", spec.trials, "Realizations per axis value");
    sweep->add_option("--seed", spec.base_seed, "Base seed (trial t uses seed+t)");
    sweep->add_option("--regimes", sweep_regimes, "Comma list or 'all'");
    sweep->add_option("--nodes", spec.n_nodes, "Relay count (fixed axes)");
    sweep->add_option("--wardens", spec.n_wardens, "Warden count (fixed axes)");
    sweep->add_option("--dim", spec.dimension, "Side length");
    sweep->add_option("--alpha", spec.alpha, "Path-loss exponent");
    sweep->add_option("--delta", spec.delta, "Covertness budget (fixed axes)");
    sweep->add_option("--node-noise", spec.node_noise, "Receiver noise variance");
    sweep->add_option("--warden-noise", spec.warden_noise,
                      "Warden noise variance");
    sweep->add_option("--out", sweep_out, "Raw CSV path; summary lands next to "
                                          "it with suffix .summary.csv")
        ->required();
    sweep->add_option("--jobs", jobs, "Worker threads (env COVERT_ROUTE_JOBS)");
    sweep->add_flag("--independent-draws", independent,
                    "Redraw placements per axis value instead of nesting");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the randomized oracle suites");
    VerifyOptions vopts;
    verify->add_option("--seed", vopts.seed, "Suite seed");
    verify->add_option("--size-cap", vopts.size_cap, "Max nodes for enumeration");
    verify->add_option("--cases", vopts.cases, "Cases per suite");
    verify
        ->add_option("--inject-cost-perturbation", vopts.cost_perturbation,
                     "Test hook: offset Dijkstra costs before comparison")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }

    if (gen->parsed()) {
        const Scenario s = generate_random(gen_seed, gen_nodes, gen_wardens,
                                           gen_dim, gen_alpha, gen_node_noise,
                                           gen_warden_noise);
        save_scenario(s, gen_out);
        std::cout << gen_out << "\n";
        return 0;
    }

    if (snap->parsed()) {
        const Scenario s = load_scenario(snap_file);
        const CovertBudget budget(snap_delta);
        std::ofstream csv;
        if (!snap_out.empty()) {
            csv.open(snap_out);
            if (!csv) throw ValidationError("cannot write " + snap_out);
            csv << "regime,path,path_len,path_cost,rate_coeff,delay_coeff\n";
        }
        for (Regime regime : parse_regimes(snap_regime)) {
            const RouteResult r = route(s, budget, regime);
            print_plan(std::cout, r, snap_delta, snap_n);
            if (csv.is_open()) {
                csv << regime_name(regime) << ',';
                for (std::size_t i = 0; i < r.path.nodes.size(); ++i)
                    csv << (i ? "-" : "") << r.path.nodes[i];
                csv << ',' << r.path.hops() << ','
                    << format_double(r.path_cost) << ','
                    << format_double(r.plan.rate_coeff) << ','
                    << format_double(r.plan.delay_total) << '\n';
            }
        }
        return 0;
    }

    if (sweep->parsed()) {
        spec.axis = axis_from_name(sweep_axis);
        spec.values = parse_values(sweep_values);
        spec.regimes = parse_regimes(sweep_regimes);
        spec.nested = !independent;
        spec.jobs = jobs;
        const ExperimentResult result = run_sweep(spec);
        std::ofstream raw(sweep_out);
        if (!raw) throw ValidationError("cannot write " + sweep_out);
        write_raw_csv(raw, result);
        const std::string summary_path = sweep_out + ".summary.csv";
        std::ofstream summary(summary_path);
        if (!summary) throw ValidationError("cannot write " + summary_path);
        write_summary_csv(summary, result);
        std::cout << sweep_out << "\n" << summary_path << "\n";
        if (result.failed_trials > 0)
            std::cerr << result.failed_trials << " trial evaluations failed\n";
        return 0;
    }

    if (verify->parsed()) {
        const auto reports = run_verification(vopts);
        bool all_passed = true;
        for (const auto& r : reports) {
            std::cout << r.name << ": " << r.cases << " cases: "
                      << (r.passed ? "PASS" : "FAIL") << "\n";
            if (!r.passed) {
                std::cout << "  " << r.detail << "\n";
                all_passed = false;
            }
        }
        std::cout << reports.size() << " suites, " << vopts.cases
                  << " cases each: " << (all_passed ? "PASS" : "FAIL") << "\n";
        return all_passed ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const covertroute::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
