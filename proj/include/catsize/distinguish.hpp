#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "catsize/rdm.hpp"

namespace catsize {

// Helstrom bound for equiprobable branches: P = 1/2 + 1/4 ||rho_a - rho_b||,
// trace norm evaluated by Jacobi eigendecomposition of the difference.
double success_probability(const HermitianMatrix& rho_a, const HermitianMatrix& rho_b);
double error_probability(const HermitianMatrix& rho_a, const HermitianMatrix& rho_b);

// Closed form for product branches with per-particle overlap 1 - eps^2:
//   P(n) = 1/2 (1 + sqrt(1 - (1 - eps^2)^n))
double ghz_like_probability(double epsilon_sq, int n);

// Smallest n with ghz_like_probability >= 1 - delta:
//   n_min = ceil( log(4 delta - 4 delta^2) / log(1 - eps^2) )
int ghz_like_nmin(double epsilon_sq, double delta);

enum class RdmMode { ClosedForm, FiniteN };

struct CatSizeResult {
    double delta = 0.0;
    std::optional<int> n_min;
    std::optional<int> n_particles;
    std::vector<std::pair<int, double>> probability_trace;  // every probed (n, P)

    // 1/n_min, or 0 when the scan exhausted without reaching 1 - delta
    double relative_size() const;
    // N/n_min, or 0 when undefined; requires a known particle number
    double cat_size() const;
};

// Linear scan n = 1, 2, ... over success_probability applied to the branch
// RDMs, stopping at the first n with P >= 1 - delta. In finite-N mode the
// scan is capped at min(n_max, N); n_max must not exceed N.
CatSizeResult cat_size(const SuperpositionSpec& spec, double delta, RdmMode mode,
                       int n_max = 100, const quad::Options& opts = {});

// Closed-form scan with no particle number attached; reports 1/n_min only.
CatSizeResult relative_cat_size(const GaussianSpread& spread, double delta, int n_max = 100);

} // namespace catsize
