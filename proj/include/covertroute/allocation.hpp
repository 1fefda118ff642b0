#pragma once

#include <string>
#include <vector>

#include "covertroute/covertness.hpp"
#include "covertroute/scenario.hpp"

namespace covertroute {

enum class Regime { MtSk, MdSk, MtIk, MdIk };

const char* regime_name(Regime r);            // "mt-sk", "md-sk", ...
Regime regime_from_name(const std::string& s);
bool is_mt(Regime r);

// Simple path as a node-id sequence source..dest; hop i is (nodes[i], nodes[i+1]).
struct Path {
    std::vector<NodeId> nodes;

    std::size_t hops() const { return nodes.empty() ? 0 : nodes.size() - 1; }
    void validate(const Scenario& s) const;
};

// Per-link data the closed forms consume: the warden exposure omega and the
// rate-to-power gain 2*sigma_rx^2*d^alpha (P_i = gain_i * C_i).
struct LinkParams {
    double omega = 0.0;
    double gain = 0.0;
};

std::vector<LinkParams> link_params(const Path& path, const Scenario& s);

// Power/rate/delay coefficients normalized in the blocklength:
// P_i = power_coeffs[i]/sqrt(n), C_i = rate_coeffs[i]/sqrt(n),
// Delta_i = delay_coeffs[i]*sqrt(n).
struct PathPlan {
    Path path;
    Regime regime = Regime::MtSk;
    std::vector<double> power_coeffs;
    std::vector<double> rate_coeffs;
    std::vector<double> delay_coeffs;
    std::vector<double> exposures; // omega_i of each link
    std::vector<double> gains;     // 2*sigma_rx^2*d^alpha of each link
    double rate_coeff = 0.0;  // min per-link rate coefficient
    double delay_total = 0.0; // sum of delay coefficients
    bool unconstrained = false; // no warden exposure anywhere on the path

    // Per-link warden terms T_i at blocklength n, for exact-KL certification.
    std::vector<double> warden_terms(std::int64_t n) const;
};

class InfeasibleLinkError : public std::runtime_error {
public:
    explicit InfeasibleLinkError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Closed-form optimal allocation on fixed per-link parameters.
PathPlan allocate_closed_form(Regime regime, const std::vector<LinkParams>& links,
                              const CovertBudget& budget);

PathPlan allocate_mt_sk(const Path& p, const Scenario& s, const CovertBudget& b);
PathPlan allocate_md_sk(const Path& p, const Scenario& s, const CovertBudget& b);
PathPlan allocate_mt_ik(const Path& p, const Scenario& s, const CovertBudget& b);
PathPlan allocate_md_ik(const Path& p, const Scenario& s, const CovertBudget& b);
PathPlan allocate(Regime r, const Path& p, const Scenario& s,
                  const CovertBudget& b);

// Verification oracle: solves the same constrained programs numerically
// (bisection on the common rate for MT, safeguarded Newton on the Lagrange
// multiplier for MD). Throws on non-convergence with an iterate trace.
PathPlan allocate_numeric_oracle(Regime regime,
                                 const std::vector<LinkParams>& links,
                                 const CovertBudget& budget);

} // namespace covertroute
