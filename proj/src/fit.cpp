#include "catsize/fit.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "catsize/errors.hpp"

namespace catsize {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> grid_axis(double step, double maxval) {
    std::vector<double> v;
    for (int i = 0;; ++i) {
        const double x = i * step;
        if (x > maxval + 1e-12 * step) break;
        v.push_back(x);
    }
    return v;
}

} // namespace

void FitGrid::validate() const {
    if (!(theta0_step > 0.0) || !(sigma_step > 0.0))
        throw std::invalid_argument("grid steps must be positive");
    if (theta0_max < 0.0 || theta0_max > 0.25 + 1e-12)
        throw std::invalid_argument("theta0_max must lie in [0, 0.25] (units of pi)");
    if (sigma_max < 0.0) throw std::invalid_argument("sigma_max must be >= 0");
}

std::vector<double> FitGrid::theta0_values_over_pi() const {
    return grid_axis(theta0_step, theta0_max);
}

std::vector<double> FitGrid::sigma_values_over_pi() const {
    return grid_axis(sigma_step, sigma_max);
}

FitResult fit_number_distribution(const NumberDistribution& target, int n_particles,
                                  const FitGrid& grid, const std::vector<double>& deltas,
                                  RdmMode mode, int threads) {
    grid.validate();
    if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
    if (static_cast<int>(target.probs.size()) != n_particles + 1)
        throw std::invalid_argument("target length must be N+1");
    for (double p : target.probs)
        if (!(p >= 0.0)) throw std::invalid_argument("target probabilities must be >= 0");
    const double total = target.sum();
    if (std::abs(total - 1.0) > 1e-6)
        throw NormalizationError("target distribution is not normalized within 1e-6");

    std::vector<double> t(target.probs);
    for (double& p : t) p /= total;

    const auto theta0s = grid.theta0_values_over_pi();
    const auto sigmas = grid.sigma_values_over_pi();
    const std::size_t cells = theta0s.size() * sigmas.size();
    std::vector<double> residuals(cells);

    auto cell_residual = [&](std::size_t idx) {
        const double th = theta0s[idx / sigmas.size()] * kPi;
        const double sg = sigmas[idx % sigmas.size()] * kPi;
        const auto model = number_distribution({n_particles, {th, sg}});
        double r = 0.0;
        for (int k = 0; k <= n_particles; ++k) {
            const double d = model.probs[k] - t[k];
            r += d * d;
        }
        residuals[idx] = r;
    };

    int workers = threads > 0 ? threads
                              : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min<int>(workers, static_cast<int>(cells)));
    if (workers == 1) {
        for (std::size_t i = 0; i < cells; ++i) cell_residual(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cells; i = next.fetch_add(1))
                    cell_residual(i);
            });
        for (auto& th : pool) th.join();
    }

    // deterministic reduction: best residual, ties toward smaller sigma then
    // smaller theta0
    std::size_t best = 0;
    for (std::size_t i = 1; i < cells; ++i) {
        const double ri = residuals[i], rb = residuals[best];
        const double si = sigmas[i % sigmas.size()], sb = sigmas[best % sigmas.size()];
        const double ti = theta0s[i / sigmas.size()], tb = theta0s[best / sigmas.size()];
        if (ri < rb || (ri == rb && (si < sb || (si == sb && ti < tb)))) best = i;
    }

    FitResult res;
    res.theta0_over_pi = theta0s[best / sigmas.size()];
    res.sigma_over_pi = sigmas[best % sigmas.size()];
    res.theta0 = res.theta0_over_pi * kPi;
    res.sigma = res.sigma_over_pi * kPi;
    res.residual = residuals[best];
    res.grid = grid;

    for (double delta : deltas) {
        const SuperpositionSpec spec{n_particles, {res.theta0, res.sigma}};
        const int n_max = (mode == RdmMode::FiniteN) ? n_particles : 100;
        res.cat_sizes.emplace(delta, cat_size(spec, delta, mode, n_max));
    }
    return res;
}

} // namespace catsize
