#pragma once

#include <map>
#include <vector>

#include "catsize/distinguish.hpp"
#include "catsize/state_model.hpp"

namespace catsize {

// Exhaustive search grid over the spread parameters. theta0 covers
// [0, theta0_max] (the number distribution is invariant under the symmetries
// that map the rest of the parameter range into this wedge), sigma covers
// [0, sigma_max].
struct FitGrid {
    double theta0_max = 0.25;  // in units of pi
    double theta0_step = 0.01;
    double sigma_max = 0.05;
    double sigma_step = 0.005;

    void validate() const;
    std::vector<double> theta0_values_over_pi() const;
    std::vector<double> sigma_values_over_pi() const;
};

struct FitResult {
    double theta0 = 0.0;  // radians
    double sigma = 0.0;
    double theta0_over_pi = 0.0;
    double sigma_over_pi = 0.0;
    double residual = 0.0;  // sum of squared probability differences
    FitGrid grid;
    std::map<double, CatSizeResult> cat_sizes;  // delta -> downstream scan result
};

// Least-squares fit of (theta0, sigma) to a particle-number distribution by
// exhaustive grid search; ties broken toward smaller sigma, then smaller
// theta0. The target must have length N+1 and sum to 1 within 1e-6 (it is
// renormalized before the search). Requested deltas get downstream cat-size
// scans at the fitted parameters.
FitResult fit_number_distribution(const NumberDistribution& target, int n_particles,
                                  const FitGrid& grid = {},
                                  const std::vector<double>& deltas = {},
                                  RdmMode mode = RdmMode::FiniteN,
                                  int threads = 0);

} // namespace catsize
