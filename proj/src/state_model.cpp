#include "catsize/state_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace catsize {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// such that the clipped tail mass is identical on both sides of every
// comparison made against the quadrature forms
constexpr double kWindowSigmas = 5.0;

double clipped_density_mass(double theta0, double sigma, double lo, double hi) {
    const double rt2 = std::numbers::sqrt2;
    return 0.5 * (std::erf((hi - theta0) / (sigma * rt2)) -
                  std::erf((lo - theta0) / (sigma * rt2)));
}

} // namespace

double GaussianSpread::window_lo() const {
    return std::max(-kHalfPi, theta0 - kWindowSigmas * sigma);
}

double GaussianSpread::window_hi() const {
    return std::min(kHalfPi, theta0 + kWindowSigmas * sigma);
}

double GaussianSpread::amplitude(double theta) const {
    const double raw = std::pow(2.0 * kPi * sigma * sigma, -0.25) *
                       std::exp(-(theta - theta0) * (theta - theta0) / (4.0 * sigma * sigma));
    const double mass = clipped_density_mass(theta0, sigma, window_lo(), window_hi());
    return raw / std::sqrt(mass);
}

void GaussianSpread::validate() const {
    if (!(theta0 >= -kHalfPi && theta0 <= kHalfPi))
        throw std::invalid_argument("theta0 must lie in [-pi/2, pi/2]");
    if (!(sigma >= 0.0))
        throw std::invalid_argument("sigma must be >= 0");
}

void SuperpositionSpec::validate() const {
    if (n_particles < 1) throw std::invalid_argument("n_particles must be >= 1");
    spread.validate();
}

double NumberDistribution::sum() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

std::complex<double> branch_overlap(const SuperpositionSpec& spec, const quad::Options& opts) {
    spec.validate();
    const int n = spec.n_particles;
    const GaussianSpread& f = spec.spread;

    if (f.is_delta()) {
        // <phi_A(t0)|phi_B(t0)> = sin^N(2 t0), norms are 1
        return quad::ipow(std::sin(2.0 * f.theta0), n);
    }

    auto integrand = [&](double t, double tp, std::span<std::complex<double>> out) {
        const double w = f.amplitude(t) * f.amplitude(tp);
        out[0] = w * quad::ipow(std::sin(t + tp), n);  // <Psi_A|Psi_B>
        out[1] = w * quad::ipow(std::cos(t - tp), n);  // ||Psi_A||^2 = ||Psi_B||^2
    };
    const auto v = quad::integrate2d(integrand, f.window_lo(), f.window_hi(),
                                     f.window_lo(), f.window_hi(), 2, opts);
    return v[0] / v[1].real();
}

NumberDistribution number_distribution(const SuperpositionSpec& spec, const quad::Options& opts) {
    spec.validate();
    const int n = spec.n_particles;
    const GaussianSpread& f = spec.spread;

    // amplitude(k) ~ sqrt(C(N,k)) integral f(t) [cos^k t sin^(N-k) t + sin^k t cos^(N-k) t]
    std::vector<double> sqrt_binom(n + 1);
    sqrt_binom[0] = 1.0;
    for (int k = 1; k <= n; ++k)
        sqrt_binom[k] = sqrt_binom[k - 1] * std::sqrt(double(n - k + 1) / double(k));

    std::vector<std::complex<double>> amps(n + 1);
    if (f.is_delta()) {
        const double c = std::cos(f.theta0), s = std::sin(f.theta0);
        for (int k = 0; k <= n; ++k)
            amps[k] = sqrt_binom[k] * (quad::ipow(c, k) * quad::ipow(s, n - k) +
                                       quad::ipow(s, k) * quad::ipow(c, n - k));
    } else {
        std::vector<double> cpow(n + 1), spow(n + 1);
        auto integrand = [&](double t, std::span<std::complex<double>> out) {
            const double w = f.amplitude(t);
            const double c = std::cos(t), s = std::sin(t);
            cpow[0] = spow[0] = 1.0;
            for (int k = 1; k <= n; ++k) {
                cpow[k] = cpow[k - 1] * c;
                spow[k] = spow[k - 1] * s;
            }
            for (int k = 0; k <= n; ++k)
                out[k] = w * sqrt_binom[k] * (cpow[k] * spow[n - k] + spow[k] * cpow[n - k]);
        };
        amps = quad::integrate(integrand, f.window_lo(), f.window_hi(), n + 1, opts);
    }

    double norm = 0.0;
    for (const auto& a : amps) norm += std::norm(a);
    NumberDistribution dist;
    dist.probs.resize(n + 1);
    for (int k = 0; k <= n; ++k) dist.probs[k] = std::norm(amps[k]) / norm;
    return dist;
}

double distillation_probability(std::complex<double> overlap, std::complex<double> g) {
    if (std::abs(g) > 1.0 + 1e-12) throw std::invalid_argument("|g| must be <= 1");
    if (std::abs(overlap) > 1.0 + 1e-12) throw std::invalid_argument("|overlap| must be <= 1");
    const double numerator = (2.0 + 2.0 * overlap.real()) * std::norm(g);
    const double denominator = 1.0 + std::norm(g) + 2.0 * (overlap * g).real();
    if (std::abs(denominator) < 1e-14)
        throw std::domain_error("distillation denominator vanishes");
    return numerator / denominator;
}

} // namespace catsize
