#pragma once

#include <complex>
#include <vector>

#include "catsize/quadrature.hpp"

namespace catsize {

// Gaussian amplitude spreading function over the branch-mixing angle:
//   f(theta) = (2 pi sigma^2)^(-1/4) exp(-(theta - theta0)^2 / (4 sigma^2)),
// truncated to theta0 +/- 5 sigma clipped into [-pi/2, pi/2] and renormalized
// so that the integral of |f|^2 over the window is 1. sigma = 0 is the exact
// delta-function case and bypasses quadrature entirely.
struct GaussianSpread {
    double theta0 = 0.0;  // radians in [-pi/2, pi/2]
    double sigma = 0.0;   // radians >= 0

    bool is_delta() const { return sigma == 0.0; }
    double window_lo() const;
    double window_hi() const;
    double amplitude(double theta) const;  // renormalized f(theta) inside the window

    void validate() const;  // throws std::invalid_argument
};

// Two-branch, two-mode bosonic superposition of N particles:
//   |Psi> ~ integral dtheta f(theta) [ (cos a^ + sin b^)^N + (sin a^ + cos b^)^N ] |0>
struct SuperpositionSpec {
    int n_particles = 1;
    GaussianSpread spread;

    void validate() const;
};

// Probability vector over the occupation of mode a, length N+1.
struct NumberDistribution {
    std::vector<double> probs;

    int n_particles() const { return static_cast<int>(probs.size()) - 1; }
    double sum() const;
};

// Normalized inner product <Psi_A|Psi_B> / (||Psi_A|| ||Psi_B||), evaluated
// by 2-D quadrature of f(theta) f(theta') against the exact finite-N kernels
// cos^N(theta - theta') and sin^N(theta + theta').
std::complex<double> branch_overlap(const SuperpositionSpec& spec,
                                    const quad::Options& opts = {});

// P(k) = |<k, N-k|Psi>|^2 for the normalized full state (cross term between
// the branches included via the amplitude sum).
NumberDistribution number_distribution(const SuperpositionSpec& spec,
                                       const quad::Options& opts = {});

// Success probability of distilling |A> + g|B> into the balanced
// superposition with a single generalized measurement:
//   p_g = (2 + <A|B> + <B|A>) |g|^2 / (1 + <A|B> g + <B|A> g* + |g|^2).
double distillation_probability(std::complex<double> overlap, std::complex<double> g);

} // namespace catsize
