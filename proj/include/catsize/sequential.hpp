#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace catsize {

enum class Branch { A, B };

// Two product-state branches described by the per-particle overlap
// magnitudes c_k = |<psi_A^(k)|psi_B^(k)>| and the prior weight of branch A.
// A single-mode bosonic pair (a^dag)^N|0>, (b^dag)^N|0> maps onto this with
// the same overlap repeated for every k.
struct ProductBranchPair {
    std::vector<double> overlaps;
    double prior_a = 0.5;

    void validate() const;
};

// Optimal single-particle measurement for priors (q_a, 1-q_a) and overlap c:
// R = sqrt(1 - 4 q_a q_b c^2), P = 1/2 + R/2, plus the four conditional
// outcome probabilities. The degenerate R = 0 case (identical states at
// equal priors) yields uninformative 1/2 conditionals.
struct SingleMeasurement {
    double r = 0.0;
    double p = 0.5;
    double p_ea_given_a = 0.5;
    double p_ea_given_b = 0.5;
    double p_eb_given_a = 0.5;
    double p_eb_given_b = 0.5;
};

SingleMeasurement optimal_single_measurement(double prior_a, double c);

struct ProtocolStep {
    int index = 0;  // 1-based particle index
    double r = 0.0;
    double p = 0.5;
    std::optional<Branch> outcome;  // sampled outcome; empty in the analytic trace
    double posterior_a = 0.5;       // posterior of A after this step (analytic trace:
                                    // posterior of the branch favored by the outcome)
};

struct ProtocolTrace {
    std::vector<ProtocolStep> steps;
    double final_success_probability = 0.5;
};

// Deterministic R_k / P_k recursion with Bayesian updating of the priors;
// the overall success probability is P_n = 1/2 + 1/2 sqrt(1 - 4 q_a q_b prod c_k^2).
ProtocolTrace run_protocol(const ProductBranchPair& branches);

// Monte Carlo realization: sample the outcome of each optimally chosen
// measurement from its conditional distribution, update the priors, and
// decide by the final outcome label. Returns the fraction of correct
// decisions; deterministic for a fixed seed.
double simulate_protocol(const ProductBranchPair& branches, Branch true_branch,
                         std::uint64_t rng_seed, long trials);

} // namespace catsize
