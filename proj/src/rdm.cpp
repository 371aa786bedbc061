#include "catsize/rdm.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "catsize/quadrature.hpp"

namespace catsize {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarterPi = 0.25 * std::numbers::pi;
using cplx = std::complex<double>;

// i^m for any integer m
cplx unit_i_pow(int m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

// b_k = sqrt(C(n,k) / 2^n)
std::vector<double> half_binom_sqrt(int n) {
    std::vector<double> b(n + 1);
    b[0] = std::exp2(-0.5 * n);
    for (int k = 1; k <= n; ++k) b[k] = b[k - 1] * std::sqrt(double(n - k + 1) / double(k));
    return b;
}

void hermitize(HermitianMatrix& m) {
    for (int k = 0; k < m.dim(); ++k) {
        m(k, k) = {m(k, k).real(), 0.0};
        for (int l = k + 1; l < m.dim(); ++l) {
            const cplx avg = 0.5 * (m(k, l) + std::conj(m(l, k)));
            m(k, l) = avg;
            m(l, k) = std::conj(avg);
        }
    }
}

double gauss_factor(double theta0, double sigma, double center) {
    if (sigma == 0.0) return theta0 == center ? 1.0 : 0.0;
    const double d = theta0 - center;
    return std::exp(-d * d / (2.0 * sigma * sigma));
}

} // namespace

double binomial(long n, long k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (long i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
    return r;
}

BranchPair branch_pair_closed_form(const GaussianSpread& spread, int n) {
    spread.validate();
    if (n < 1) throw std::invalid_argument("n must be >= 1");

    const double t0 = spread.theta0;
    const double s2 = spread.sigma * spread.sigma;
    const auto b = half_binom_sqrt(n);

    BranchPair out{n, HermitianMatrix(n + 1), HermitianMatrix(n + 1)};
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= n; ++l) {
            const int d = k - l;
            const double pref = b[k] * b[l] * std::exp(-2.0 * d * d * s2);
            const cplx aa = unit_i_pow(d) * std::polar(1.0, -2.0 * d * t0) * pref;
            out.rho_a(k, l) = aa;
            out.rho_b(k, l) = std::conj(aa);
        }
    }
    hermitize(out.rho_a);
    hermitize(out.rho_b);
    return out;
}

BranchRdms rdm_closed_form(const GaussianSpread& spread, int n) {
    BranchPair pair = branch_pair_closed_form(spread, n);

    const double t0 = spread.theta0;
    const double s2 = spread.sigma * spread.sigma;
    const double e_minus = gauss_factor(t0, spread.sigma, kQuarterPi);
    const double e_plus = gauss_factor(t0, spread.sigma, -kQuarterPi);
    const auto b = half_binom_sqrt(n);

    BranchRdms out;
    out.n = n;
    out.rho_full = HermitianMatrix(n + 1);
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= n; ++l) {
            const int d = k - l;
            const double pref = b[k] * b[l] * std::exp(-2.0 * d * d * s2);
            const double sign = (((n + d) % 2 + 2) % 2 == 0) ? 1.0 : -1.0;
            const double cross = 2.0 * pref * (e_minus + sign * e_plus);
            out.rho_full(k, l) = pair.rho_a(k, l) + pair.rho_b(k, l) + cross;
        }
    }

    // branch traces are already 1; the full-state trace is the explicit
    // 2 + 2(E- + (-1)^n E+) form
    const double n_sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double full_trace = 2.0 + 2.0 * (e_minus + n_sign * e_plus);
    if (std::abs(full_trace) < 1e-300)
        throw std::domain_error("full state has vanishing norm (cancelling branches)");
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) out.rho_full(k, l) /= full_trace;

    hermitize(out.rho_full);
    out.rho_a = std::move(pair.rho_a);
    out.rho_b = std::move(pair.rho_b);
    return out;
}

namespace {

// Raw kernel integrals, before the i-power and binomial prefactors:
//   I_AA(k,l) = II f f' e^(-2i(k t - l t') + i n (t - t')) cos^(N-n)(t - t')
//   I_AB(k,l) = II f f' e^(-2i(k t + l t') + i n (t + t')) sin^(N-n)(t + t')
// Returns the AA block, followed by the AB block when with_cross is set.
std::vector<cplx> finite_raw_integrals(const SuperpositionSpec& spec, int n,
                                       const quad::Options& opts, bool with_cross) {
    const long m = spec.n_particles - n;
    const GaussianSpread& f = spec.spread;
    const int dim = n + 1;
    const int entries = dim * dim;
    const int blocks = with_cross ? 2 : 1;

    if (f.is_delta()) {
        std::vector<cplx> raw(blocks * entries, 0.0);
        const double sin2t = quad::ipow(std::sin(2.0 * f.theta0), m);
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) {
                raw[k * dim + l] = std::polar(1.0, -2.0 * (k - l) * f.theta0);
                if (with_cross)
                    raw[entries + k * dim + l] =
                        std::polar(1.0, (2.0 * n - 2.0 * (k + l)) * f.theta0) * sin2t;
            }
        return raw;
    }

    std::vector<cplx> u(dim), v(dim);
    auto integrand = [&](double t, double tp, std::span<cplx> out) {
        const double w = f.amplitude(t) * f.amplitude(tp);
        const double cosm = quad::ipow(std::cos(t - tp), m);
        const cplx et = std::polar(1.0, -2.0 * t);
        const cplx etp = std::polar(1.0, -2.0 * tp);
        u[0] = v[0] = 1.0;
        for (int k = 1; k <= n; ++k) {
            u[k] = u[k - 1] * et;   // e^(-2ikt)
            v[k] = v[k - 1] * etp;  // e^(-2iktp)
        }
        const cplx aa_phase = w * cosm * std::polar(1.0, n * (t - tp));
        for (int k = 0; k <= n; ++k) {
            const cplx ua = aa_phase * u[k];
            for (int l = 0; l <= n; ++l) out[k * dim + l] = ua * std::conj(v[l]);
        }
        if (with_cross) {
            const double sinm = quad::ipow(std::sin(t + tp), m);
            const cplx ab_phase = w * sinm * std::polar(1.0, n * (t + tp));
            for (int k = 0; k <= n; ++k) {
                const cplx ub = ab_phase * u[k];
                for (int l = 0; l <= n; ++l) out[entries + k * dim + l] = ub * v[l];
            }
        }
    };
    return quad::integrate2d(integrand, f.window_lo(), f.window_hi(), f.window_lo(),
                             f.window_hi(), blocks * entries, opts);
}

BranchPair assemble_branches(const std::vector<cplx>& raw, int n) {
    const int dim = n + 1;
    const auto b = half_binom_sqrt(n);
    BranchPair out{n, HermitianMatrix(dim), HermitianMatrix(dim)};
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
            const double pref = b[k] * b[l];
            // f is real, so the BB integral is the conjugate of the AA one
            out.rho_a(k, l) = unit_i_pow(k - l) * pref * raw[k * dim + l];
            out.rho_b(k, l) = unit_i_pow(l - k) * pref * std::conj(raw[k * dim + l]);
        }
    out.rho_a.normalize_trace();
    out.rho_b.normalize_trace();
    hermitize(out.rho_a);
    hermitize(out.rho_b);
    return out;
}

} // namespace

BranchPair branch_pair_finite_n(const SuperpositionSpec& spec, int n,
                                const quad::Options& opts) {
    spec.validate();
    if (n < 1 || n > spec.n_particles) throw std::invalid_argument("n must lie in [1, N]");
    return assemble_branches(finite_raw_integrals(spec, n, opts, false), n);
}

BranchRdms rdm_finite_n(const SuperpositionSpec& spec, int n, const quad::Options& opts) {
    spec.validate();
    if (n < 1 || n > spec.n_particles) throw std::invalid_argument("n must lie in [1, N]");
    const int dim = n + 1;
    const int entries = dim * dim;
    const auto raw = finite_raw_integrals(spec, n, opts, true);
    const auto b = half_binom_sqrt(n);

    BranchRdms out;
    out.n = n;
    out.rho_full = HermitianMatrix(dim);
    HermitianMatrix cross(dim);
    // unnormalized branch matrices plus the AB + BA cross block
    HermitianMatrix raw_a(dim), raw_b(dim);
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
            const double pref = b[k] * b[l];
            raw_a(k, l) = unit_i_pow(k - l) * pref * raw[k * dim + l];
            raw_b(k, l) = unit_i_pow(l - k) * pref * std::conj(raw[k * dim + l]);
            cross(k, l) = unit_i_pow(k + l - n) * pref * raw[entries + k * dim + l];
        }

    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l)
            out.rho_full(k, l) = raw_a(k, l) + raw_b(k, l) + cross(k, l) + std::conj(cross(l, k));

    out.rho_a = std::move(raw_a);
    out.rho_b = std::move(raw_b);
    out.rho_a.normalize_trace();
    out.rho_b.normalize_trace();
    out.rho_full.normalize_trace();
    hermitize(out.rho_a);
    hermitize(out.rho_b);
    hermitize(out.rho_full);
    return out;
}

long FockOccupation::total() const {
    long t = 0;
    for (long c : counts) t += c;
    return t;
}

int FockOccupation::occupied_modes() const {
    int m = 0;
    for (long c : counts) m += (c > 0);
    return m;
}

void FockOccupation::validate() const {
    if (counts.empty()) throw std::invalid_argument("occupation needs at least one mode");
    for (long c : counts)
        if (c < 0) throw std::invalid_argument("occupation numbers must be >= 0");
    if (total() < 1) throw std::invalid_argument("total particle number must be >= 1");
}

namespace {

void patterns_rec(const std::vector<long>& occ, std::size_t mode, long remaining,
                  std::vector<long>& current, std::vector<std::vector<long>>& out) {
    if (mode == occ.size() - 1) {
        if (remaining <= occ[mode]) {
            current[mode] = remaining;
            out.push_back(current);
        }
        return;
    }
    const long hi = std::min(occ[mode], remaining);
    for (long p = 0; p <= hi; ++p) {
        current[mode] = p;
        patterns_rec(occ, mode + 1, remaining - p, current, out);
    }
}

} // namespace

std::vector<std::vector<long>> fock_patterns(const FockOccupation& occ, int n) {
    occ.validate();
    if (n < 1 || n > occ.total()) throw std::invalid_argument("n must lie in [1, N]");
    std::vector<std::vector<long>> out;
    std::vector<long> current(occ.counts.size(), 0);
    patterns_rec(occ.counts, 0, n, current, out);
    return out;
}

HermitianMatrix fock_rdm(const FockOccupation& occ, int n) {
    const auto pats = fock_patterns(occ, n);
    const double denom = binomial(occ.total(), n);
    HermitianMatrix rho(static_cast<int>(pats.size()));
    for (std::size_t i = 0; i < pats.size(); ++i) {
        double w = 1.0;
        for (std::size_t k = 0; k < pats[i].size(); ++k)
            w *= binomial(occ.counts[k], pats[i][k]);
        rho(static_cast<int>(i), static_cast<int>(i)) = w / denom;
    }
    return rho;
}

} // namespace catsize
