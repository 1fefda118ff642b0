#include "covertroute/covertness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace covertroute {

double CovertBudget::gamma1(std::int64_t n) const {
    if (n < 1) throw ValidationError("blocklength n must be >= 1");
    return 2.0 * std::sqrt(delta / static_cast<double>(n));
}

double CovertBudget::gamma2(std::int64_t n) const {
    if (n < 1) throw ValidationError("blocklength n must be >= 1");
    return 4.0 * delta / static_cast<double>(n);
}

double link_exposure(const Scenario& s, NodeId tx, NodeId rx) {
    if (tx == rx) throw ValidationError("link_exposure: tx == rx");
    const SystemNode& t = s.node(tx);
    const SystemNode& r = s.node(rx);
    const double d_link = distance(t.position, r.position);
    const double link_term = r.noise_var * std::pow(d_link, s.alpha);

    double omega = 0.0;
    for (const auto& w : s.wardens) {
        const double d_tw = distance(t.position, w.position);
        if (d_tw == 0.0)
            return std::numeric_limits<double>::infinity();
        omega += link_term / (w.noise_var * std::pow(d_tw, s.alpha));
    }
    return omega;
}

double bound_sk(const std::vector<double>& terms, std::int64_t n) {
    double sum = 0.0;
    for (double t : terms) sum += t;
    return 0.25 * static_cast<double>(n) * sum * sum;
}

double bound_ik(const std::vector<double>& terms, std::int64_t n) {
    double sum_sq = 0.0;
    for (double t : terms) sum_sq += t * t;
    return 0.25 * static_cast<double>(n) * sum_sq;
}

double exact_kl_sk(const std::vector<double>& terms, std::int64_t n) {
    if (n < 1) throw ValidationError("blocklength n must be >= 1");
    double total = 0.0;
    for (double t : terms) total += t;
    // log1p: in the operating regime T ~ 1/sqrt(n), naive ln(1+T) cancels.
    return 0.5 * static_cast<double>(n) * (total - std::log1p(total));
}

double exact_kl_ik(const std::vector<double>& terms, std::int64_t n) {
    if (n < 1) throw ValidationError("blocklength n must be >= 1");
    double d = 0.0;
    for (double t : terms)
        d += 0.5 * static_cast<double>(n) * (t - std::log1p(t));
    return d;
}

double kl_gaussian_oracle(const GaussianPair& pair) {
    const std::size_t m = pair.sigma_diag.size();
    if (pair.u.size() != m)
        throw ValidationError("GaussianPair: dim(u) != dim(sigma_diag)");
    if (pair.replication < 1)
        throw ValidationError("GaussianPair: replication must be >= 1");
    for (double s : pair.sigma_diag)
        if (!(s > 0.0)) throw ValidationError("GaussianPair: singular S");

    // Sigma1 = S + u u^T, materialized dense.
    std::vector<double> sigma1(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            sigma1[i * m + j] = pair.u[i] * pair.u[j];
        sigma1[i * m + i] += pair.sigma_diag[i];
    }

    // Tr(S^-1 Sigma1) - m
    double trace_excess = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        trace_excess += sigma1[i * m + i] / pair.sigma_diag[i] - 1.0;

    // ln|Sigma1| by Cholesky.
    std::vector<double> chol = sigma1;
    double logdet1 = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double diag = chol[j * m + j];
        for (std::size_t k = 0; k < j; ++k)
            diag -= chol[j * m + k] * chol[j * m + k];
        if (!(diag > 0.0))
            throw ValidationError("GaussianPair: Sigma1 not positive definite");
        const double ljj = std::sqrt(diag);
        chol[j * m + j] = ljj;
        logdet1 += 2.0 * std::log(ljj);
        for (std::size_t i = j + 1; i < m; ++i) {
            double v = chol[i * m + j];
            for (std::size_t k = 0; k < j; ++k)
                v -= chol[i * m + k] * chol[j * m + k];
            chol[i * m + j] = v / ljj;
        }
    }

    double logdet0 = 0.0;
    for (double s : pair.sigma_diag) logdet0 += std::log(s);

    return 0.5 * static_cast<double>(pair.replication) *
           (trace_excess - (logdet1 - logdet0));
}

} // namespace covertroute
