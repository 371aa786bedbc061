#include "catsize/distinguish.hpp"

#include <cmath>
#include <stdexcept>

namespace catsize {

double success_probability(const HermitianMatrix& rho_a, const HermitianMatrix& rho_b) {
    if (rho_a.dim() != rho_b.dim())
        throw std::invalid_argument("density matrix dimensions differ");
    return 0.5 + 0.25 * (rho_a - rho_b).trace_norm();
}

double error_probability(const HermitianMatrix& rho_a, const HermitianMatrix& rho_b) {
    return 1.0 - success_probability(rho_a, rho_b);
}

double ghz_like_probability(double epsilon_sq, int n) {
    if (epsilon_sq < 0.0 || epsilon_sq > 1.0)
        throw std::invalid_argument("epsilon_sq must lie in [0, 1]");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double c2n = quad::ipow(1.0 - epsilon_sq, n);
    return 0.5 * (1.0 + std::sqrt(1.0 - c2n));
}

int ghz_like_nmin(double epsilon_sq, double delta) {
    if (epsilon_sq <= 0.0 || epsilon_sq > 1.0)
        throw std::invalid_argument("epsilon_sq must lie in (0, 1]");
    if (delta <= 0.0 || delta >= 0.5)
        throw std::invalid_argument("delta must lie in (0, 1/2)");
    if (epsilon_sq >= 1.0) return 1;
    const double n = std::ceil(std::log(4.0 * delta - 4.0 * delta * delta) /
                               std::log(1.0 - epsilon_sq));
    return std::max(1, static_cast<int>(n));
}

double CatSizeResult::relative_size() const {
    return n_min ? 1.0 / static_cast<double>(*n_min) : 0.0;
}

double CatSizeResult::cat_size() const {
    if (!n_min) return 0.0;
    if (!n_particles)
        throw std::logic_error("cat size requires a particle number; use relative_size()");
    return static_cast<double>(*n_particles) / static_cast<double>(*n_min);
}

namespace {

template <typename RdmAt>
CatSizeResult scan_cat_size(double delta, int cap, const RdmAt& rdm_at) {
    if (delta <= 0.0 || delta >= 0.5)
        throw std::invalid_argument("delta must lie in (0, 1/2)");
    CatSizeResult res;
    res.delta = delta;
    for (int n = 1; n <= cap; ++n) {
        const BranchPair pair = rdm_at(n);
        const double p = success_probability(pair.rho_a, pair.rho_b);
        res.probability_trace.emplace_back(n, p);
        if (p >= 1.0 - delta) {
            res.n_min = n;
            break;
        }
    }
    return res;
}

} // namespace

CatSizeResult cat_size(const SuperpositionSpec& spec, double delta, RdmMode mode,
                       int n_max, const quad::Options& opts) {
    spec.validate();
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (mode == RdmMode::FiniteN && n_max > spec.n_particles)
        throw std::invalid_argument("n_max must not exceed N in finite-N mode");

    const int cap = (mode == RdmMode::FiniteN) ? std::min(n_max, spec.n_particles) : n_max;
    auto rdm_at = [&](int n) {
        return mode == RdmMode::FiniteN ? branch_pair_finite_n(spec, n, opts)
                                        : branch_pair_closed_form(spec.spread, n);
    };
    CatSizeResult res = scan_cat_size(delta, cap, rdm_at);
    res.n_particles = spec.n_particles;
    return res;
}

CatSizeResult relative_cat_size(const GaussianSpread& spread, double delta, int n_max) {
    spread.validate();
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    return scan_cat_size(delta, n_max, [&](int n) { return branch_pair_closed_form(spread, n); });
}

} // namespace catsize
