#pragma once

#include <cstdint>
#include <vector>

#include "covertroute/scenario.hpp"

namespace covertroute {

// Covertness budget delta bounding the wardens' relative entropy. Guarantees
// P_FA + P_MD >= 1 - epsilon with delta = 2*epsilon^2.
struct CovertBudget {
    double delta = 0.0;

    explicit CovertBudget(double delta_) : delta(delta_) {
        if (!(delta > 0.0) || !std::isfinite(delta))
            throw ValidationError("delta must be positive and finite");
    }

    double epsilon() const { return std::sqrt(delta / 2.0); }

    // Single-key covertness threshold, 2*sqrt(delta/n).
    double gamma1(std::int64_t n) const;
    // Independent-keys covertness threshold, 4*delta/n. Equals gamma1^2.
    double gamma2(std::int64_t n) const;
};

// Per-link warden exposure: omega = sum_k sigma_rx^2 * d_link^alpha /
// (sigma_Wk^2 * d_{tx,Wk}^alpha). +infinity when the transmitter coincides
// with a warden; such links are unusable.
double link_exposure(const Scenario& s, NodeId tx, NodeId rx);

// Quadratic relative-entropy bounds for a path with per-link aggregate warden
// terms T_i = sum_k P_i / (sigma_Wk^2 d_{i,k}^alpha).
double bound_sk(const std::vector<double>& terms, std::int64_t n);
double bound_ik(const std::vector<double>& terms, std::int64_t n);

// Exact relative entropy seen by the wardens. Single key: all hops carry the
// same codeword, D = (n/2)(T - ln(1+T)) with T the grand sum over hops and
// wardens. Independent keys: per-hop divergences add.
double exact_kl_sk(const std::vector<double>& terms, std::int64_t n);
double exact_kl_ik(const std::vector<double>& terms, std::int64_t n);

// Pair of zero-mean Gaussians N(0, S (x) I_n) and N(0, (S + u u^T) (x) I_n)
// with diagonal S. The n-fold replication enters as a scalar multiplier; the
// Kronecker product is never materialized.
struct GaussianPair {
    std::vector<double> sigma_diag;
    std::vector<double> u;
    std::int64_t replication = 1;
};

// General Gaussian relative-entropy oracle,
// (rep/2) (Tr(S^-1 Sigma1) - dim - ln |Sigma1|/|S|), evaluated through a
// dense Cholesky factorization of Sigma1 = S + u u^T. Deliberately a
// different computational route than exact_kl_sk.
double kl_gaussian_oracle(const GaussianPair& pair);

} // namespace covertroute
