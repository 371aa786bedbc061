#include "catsize/sequential.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace catsize {

void ProductBranchPair::validate() const {
    if (overlaps.empty()) throw std::invalid_argument("need at least one particle");
    for (double c : overlaps)
        if (!(c >= 0.0 && c <= 1.0))
            throw std::invalid_argument("overlaps must lie in [0, 1]");
    if (!(prior_a > 0.0 && prior_a < 1.0))
        throw std::invalid_argument("prior_a must lie in (0, 1)");
}

namespace {

// Same arithmetic as optimal_single_measurement but tolerates the boundary
// priors 0 and 1 that Bayesian updating reaches after an orthogonal pair.
SingleMeasurement measurement_step(double qa, double c) {
    const double qb = 1.0 - qa;
    const double c2 = c * c;
    SingleMeasurement m;
    m.r = std::sqrt(std::max(0.0, 1.0 - 4.0 * qa * qb * c2));
    m.p = 0.5 + 0.5 * m.r;
    if (m.r == 0.0) return m;  // identical states, equal priors: coin flip

    const double ta = (1.0 - 2.0 * qb * c2) / (2.0 * m.r);
    const double tb = (1.0 - 2.0 * qa * c2) / (2.0 * m.r);
    m.p_ea_given_a = 0.5 + ta;
    m.p_eb_given_a = 0.5 - ta;
    m.p_ea_given_b = 0.5 - tb;
    m.p_eb_given_b = 0.5 + tb;
    return m;
}

} // namespace

SingleMeasurement optimal_single_measurement(double prior_a, double c) {
    if (!(prior_a > 0.0 && prior_a < 1.0))
        throw std::invalid_argument("prior_a must lie in (0, 1)");
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("c must lie in [0, 1]");
    return measurement_step(prior_a, c);
}

ProtocolTrace run_protocol(const ProductBranchPair& branches) {
    branches.validate();
    ProtocolTrace trace;
    trace.steps.reserve(branches.overlaps.size());

    // the product q_a q_b after step k is P_k (1 - P_k) whichever outcome
    // occurred, so the R_k sequence is outcome-independent
    double qa = branches.prior_a;
    for (std::size_t k = 0; k < branches.overlaps.size(); ++k) {
        const SingleMeasurement m = measurement_step(qa, branches.overlaps[k]);
        trace.steps.push_back({static_cast<int>(k) + 1, m.r, m.p, std::nullopt, m.p});
        qa = m.p;
    }
    trace.final_success_probability = trace.steps.back().p;
    return trace;
}

double simulate_protocol(const ProductBranchPair& branches, Branch true_branch,
                         std::uint64_t rng_seed, long trials) {
    branches.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    long correct = 0;
    for (long t = 0; t < trials; ++t) {
        double qa = branches.prior_a;
        Branch last_outcome = Branch::A;
        for (double c : branches.overlaps) {
            const SingleMeasurement m = measurement_step(qa, c);
            const double p_ea =
                (true_branch == Branch::A) ? m.p_ea_given_a : m.p_ea_given_b;
            const bool got_a = unif(rng) < p_ea;
            last_outcome = got_a ? Branch::A : Branch::B;

            // Bayes update; the favored branch's posterior equals P_k
            const double qb = 1.0 - qa;
            double posterior_a;
            if (got_a) {
                const double denom = qa * m.p_ea_given_a + qb * m.p_ea_given_b;
                posterior_a = denom > 0.0 ? qa * m.p_ea_given_a / denom : 0.5;
            } else {
                const double denom = qa * m.p_eb_given_a + qb * m.p_eb_given_b;
                posterior_a = denom > 0.0 ? qa * m.p_eb_given_a / denom : 0.5;
            }
            const double favored = got_a ? posterior_a : 1.0 - posterior_a;
            if (std::abs(favored - m.p) > 1e-12)
                throw std::logic_error("posterior/success-probability identity violated");
            qa = posterior_a;
        }
        correct += (last_outcome == true_branch);
    }
    return static_cast<double>(correct) / static_cast<double>(trials);
}

} // namespace catsize
