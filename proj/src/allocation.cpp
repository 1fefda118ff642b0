#include "covertroute/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace covertroute {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
} // namespace

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::MtSk: return "mt-sk";
    case Regime::MdSk: return "md-sk";
    case Regime::MtIk: return "mt-ik";
    case Regime::MdIk: return "md-ik";
    }
    return "?";
}

Regime regime_from_name(const std::string& s) {
    if (s == "mt-sk") return Regime::MtSk;
    if (s == "md-sk") return Regime::MdSk;
    if (s == "mt-ik") return Regime::MtIk;
    if (s == "md-ik") return Regime::MdIk;
    throw ValidationError("unknown regime: " + s);
}

bool is_mt(Regime r) { return r == Regime::MtSk || r == Regime::MtIk; }

void Path::validate(const Scenario& s) const {
    if (nodes.size() < 2)
        throw ValidationError("path needs at least one hop");
    if (nodes.front() != s.source)
        throw ValidationError("path must start at source");
    if (nodes.back() != s.dest)
        throw ValidationError("path must end at dest");
    std::set<NodeId> seen;
    for (NodeId id : nodes) {
        s.index_of(id); // throws on unknown id
        if (!seen.insert(id).second)
            throw ValidationError("path repeats node " + std::to_string(id));
    }
}

std::vector<LinkParams> link_params(const Path& path, const Scenario& s) {
    path.validate(s);
    std::vector<LinkParams> out;
    out.reserve(path.hops());
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        const NodeId tx = path.nodes[i];
        const NodeId rx = path.nodes[i + 1];
        const SystemNode& t = s.node(tx);
        const SystemNode& r = s.node(rx);
        const double d = distance(t.position, r.position);
        out.push_back({link_exposure(s, tx, rx),
                       2.0 * r.noise_var * std::pow(d, s.alpha)});
    }
    return out;
}

std::vector<double> PathPlan::warden_terms(std::int64_t n) const {
    if (n < 1) throw ValidationError("blocklength n must be >= 1");
    const double root_n = std::sqrt(static_cast<double>(n));
    std::vector<double> terms(power_coeffs.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        terms[i] = power_coeffs[i] * 2.0 * exposures[i] / gains[i] / root_n;
    return terms;
}

namespace {

void check_links(const std::vector<LinkParams>& links) {
    if (links.empty()) throw ValidationError("path has no links");
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (std::isinf(links[i].omega))
            throw InfeasibleLinkError("link " + std::to_string(i) +
                                      " has infinite warden exposure");
        if (!(links[i].omega >= 0.0))
            throw ValidationError("negative link exposure");
        if (!(links[i].gain > 0.0))
            throw ValidationError("link gain must be positive");
    }
}

PathPlan plan_skeleton(Regime regime, const std::vector<LinkParams>& links) {
    PathPlan plan;
    plan.regime = regime;
    const std::size_t h = links.size();
    plan.power_coeffs.assign(h, 0.0);
    plan.rate_coeffs.assign(h, 0.0);
    plan.delay_coeffs.assign(h, 0.0);
    plan.exposures.resize(h);
    plan.gains.resize(h);
    for (std::size_t i = 0; i < h; ++i) {
        plan.exposures[i] = links[i].omega;
        plan.gains[i] = links[i].gain;
    }
    return plan;
}

// Common-rate plan for the MT regimes.
void fill_common_rate(PathPlan& plan, const std::vector<LinkParams>& links,
                      double c) {
    for (std::size_t i = 0; i < links.size(); ++i) {
        plan.rate_coeffs[i] = c;
        plan.power_coeffs[i] = links[i].gain * c;
        plan.delay_coeffs[i] = 1.0 / c;
    }
    plan.rate_coeff = c;
    plan.delay_total = static_cast<double>(links.size()) / c;
}

// Plan from per-link delay coefficients for the MD regimes. Links with zero
// exposure are free: zero delay, zero power.
void fill_delays(PathPlan& plan, const std::vector<LinkParams>& links,
                 const std::vector<double>& delays) {
    double total = 0.0;
    double min_rate = kInf;
    for (std::size_t i = 0; i < links.size(); ++i) {
        plan.delay_coeffs[i] = delays[i];
        if (delays[i] > 0.0) {
            plan.rate_coeffs[i] = 1.0 / delays[i];
            plan.power_coeffs[i] = links[i].gain / delays[i];
            min_rate = std::min(min_rate, plan.rate_coeffs[i]);
        } else {
            plan.rate_coeffs[i] = kInf;
            plan.power_coeffs[i] = 0.0;
        }
        total += delays[i];
    }
    plan.rate_coeff = min_rate;
    plan.delay_total = total;
}

} // namespace

PathPlan allocate_closed_form(Regime regime, const std::vector<LinkParams>& links,
                              const CovertBudget& budget) {
    check_links(links);
    PathPlan plan = plan_skeleton(regime, links);

    const double root_delta = std::sqrt(budget.delta);
    double sum_omega = 0.0;
    for (const auto& l : links) sum_omega += l.omega;
    if (sum_omega == 0.0) {
        plan.unconstrained = true;
        return plan;
    }

    switch (regime) {
    case Regime::MtSk: {
        fill_common_rate(plan, links, root_delta / sum_omega);
        break;
    }
    case Regime::MtIk: {
        double sum_sq = 0.0;
        for (const auto& l : links) sum_sq += l.omega * l.omega;
        fill_common_rate(plan, links, root_delta / std::sqrt(sum_sq));
        break;
    }
    case Regime::MdSk: {
        double sum_root = 0.0;
        for (const auto& l : links) sum_root += std::sqrt(l.omega);
        std::vector<double> delays(links.size());
        for (std::size_t i = 0; i < links.size(); ++i)
            delays[i] = std::sqrt(links[i].omega) * sum_root / root_delta;
        fill_delays(plan, links, delays);
        break;
    }
    case Regime::MdIk: {
        double sum_23 = 0.0;
        for (const auto& l : links) sum_23 += std::cbrt(l.omega * l.omega);
        std::vector<double> delays(links.size());
        for (std::size_t i = 0; i < links.size(); ++i)
            delays[i] = std::cbrt(links[i].omega * links[i].omega) *
                        std::sqrt(sum_23) / root_delta;
        fill_delays(plan, links, delays);
        break;
    }
    }
    return plan;
}

PathPlan allocate(Regime r, const Path& p, const Scenario& s,
                  const CovertBudget& b) {
    PathPlan plan = allocate_closed_form(r, link_params(p, s), b);
    plan.path = p;
    return plan;
}

PathPlan allocate_mt_sk(const Path& p, const Scenario& s, const CovertBudget& b) {
    return allocate(Regime::MtSk, p, s, b);
}
PathPlan allocate_md_sk(const Path& p, const Scenario& s, const CovertBudget& b) {
    return allocate(Regime::MdSk, p, s, b);
}
PathPlan allocate_mt_ik(const Path& p, const Scenario& s, const CovertBudget& b) {
    return allocate(Regime::MtIk, p, s, b);
}
PathPlan allocate_md_ik(const Path& p, const Scenario& s, const CovertBudget& b) {
    return allocate(Regime::MdIk, p, s, b);
}

namespace {

// Left side of the coefficient-space covertness constraint at common rate c.
double mt_constraint(Regime regime, const std::vector<LinkParams>& links,
                     double c) {
    double v = 0.0;
    for (const auto& l : links) {
        const double t = 2.0 * l.omega * c;
        v += (regime == Regime::MtSk) ? t : t * t;
    }
    return v;
}

} // namespace

PathPlan allocate_numeric_oracle(Regime regime,
                                 const std::vector<LinkParams>& links,
                                 const CovertBudget& budget) {
    check_links(links);
    PathPlan plan = plan_skeleton(regime, links);

    double sum_omega = 0.0;
    for (const auto& l : links) sum_omega += l.omega;
    if (sum_omega == 0.0) {
        plan.unconstrained = true;
        return plan;
    }

    if (is_mt(regime)) {
        // Bisection on the common rate; the constraint is monotone in c.
        const double limit = (regime == Regime::MtSk) ? 2.0 * std::sqrt(budget.delta)
                                                      : 4.0 * budget.delta;
        double lo = 0.0, hi = 1.0;
        int expand = 0;
        while (mt_constraint(regime, links, hi) <= limit) {
            hi *= 2.0;
            if (++expand > 4000)
                throw std::runtime_error("MT oracle: bracket expansion failed");
        }
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mt_constraint(regime, links, mid) <= limit)
                lo = mid;
            else
                hi = mid;
        }
        fill_common_rate(plan, links, lo);
        return plan;
    }

    // MD regimes: safeguarded Newton on the Lagrange multiplier lambda.
    // Stationarity gives Delta_i(lambda); the active-constraint residual
    // g(lambda) is strictly decreasing in lambda.
    const bool sk = (regime == Regime::MdSk);
    const double limit = sk ? 2.0 * std::sqrt(budget.delta) : 4.0 * budget.delta;
    std::vector<double> aux(links.size()); // b_i = 2w or h_i = 4w^2
    for (std::size_t i = 0; i < links.size(); ++i)
        aux[i] = sk ? 2.0 * links[i].omega
                    : 4.0 * links[i].omega * links[i].omega;

    auto delays_at = [&](double lambda) {
        std::vector<double> d(links.size(), 0.0);
        for (std::size_t i = 0; i < links.size(); ++i) {
            if (aux[i] == 0.0) continue; // free link
            d[i] = sk ? std::sqrt(lambda * aux[i])
                      : std::cbrt(2.0 * lambda * aux[i]);
        }
        return d;
    };
    auto residual = [&](double lambda) {
        const auto d = delays_at(lambda);
        double g = 0.0;
        for (std::size_t i = 0; i < links.size(); ++i) {
            if (aux[i] == 0.0) continue;
            g += sk ? aux[i] / d[i] : aux[i] / (d[i] * d[i]);
        }
        return g - limit;
    };

    // Bracket: residual ~ lambda^{-1/2} (SK) or lambda^{-2/3} (IK).
    double lo = 1.0, hi = 1.0;
    int expand = 0;
    while (residual(lo) < 0.0) {
        lo *= 0.5;
        if (++expand > 4000)
            throw std::runtime_error("MD oracle: lower bracket failed");
    }
    expand = 0;
    while (residual(hi) > 0.0) {
        hi *= 2.0;
        if (++expand > 4000)
            throw std::runtime_error("MD oracle: upper bracket failed");
    }

    double lambda = std::sqrt(lo * hi);
    std::ostringstream trace;
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        const double g = residual(lambda);
        trace << "it=" << it << " lambda=" << lambda << " g=" << g << "\n";
        if (std::abs(g) <= 1e-14 * limit) {
            converged = true;
            break;
        }
        if (g > 0.0)
            lo = lambda;
        else
            hi = lambda;
        // dg/dlambda for the stationarity-induced delay profile.
        const double slope = sk ? -0.5 * (g + limit) / lambda
                                : -(2.0 / 3.0) * (g + limit) / lambda;
        double next = lambda - g / slope;
        if (!(next > lo) || !(next < hi))
            next = std::sqrt(lo * hi);
        lambda = next;
    }
    if (!converged)
        throw std::runtime_error("MD oracle did not converge:\n" + trace.str());

    fill_delays(plan, links, delays_at(lambda));
    return plan;
}

} // namespace covertroute
