#pragma once

#include <utility>
#include <vector>

#include "catsize/rdm.hpp"

namespace catsize {

// von Neumann entropy -sum_i p_i ln p_i in nats. Eigenvalues below 1e-14
// contribute zero; an eigenvalue below -1e-10 raises std::domain_error.
double von_neumann_entropy(const HermitianMatrix& rho);

struct EntropyCurve {
    std::vector<std::pair<int, double>> values;  // (n, S_n)
};

// S_n of the full-state n-RDM over n in [n_lo, n_hi].
EntropyCurve entropy_curve(const GaussianSpread& spread, int n_lo, int n_hi);  // closed form
EntropyCurve entropy_curve(const SuperpositionSpec& spec, int n_lo, int n_hi,
                           const quad::Options& opts = {});                    // finite N

struct DisconnectivityResult {
    std::vector<std::pair<int, double>> betas;  // (n, beta_n), beta_1 = 0
    double threshold = 0.05;
    int d_value = 1;  // max { n : beta_n < threshold }
};

// beta_n = S_n / min_{1<=m<n}(S_m + S_{n-m}); a vanishing numerator over a
// vanishing denominator counts as 1. The curve must cover n = 1..N without
// gaps.
DisconnectivityResult disconnectivity(const EntropyCurve& curve, double threshold = 0.05);

// Composes fock_rdm -> entropies -> disconnectivity over n = 1..N.
DisconnectivityResult fock_disconnectivity(const FockOccupation& occ, double threshold = 0.05);

} // namespace catsize
