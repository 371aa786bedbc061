#include "catsize/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace catsize {

double von_neumann_entropy(const HermitianMatrix& rho) {
    double s = 0.0;
    for (double ev : rho.eigenvalues()) {
        if (ev < -1e-10) throw std::domain_error("density matrix has a negative eigenvalue");
        if (ev < 1e-14) continue;  // 0 ln 0 := 0
        s -= ev * std::log(ev);
    }
    return std::max(s, 0.0);
}

EntropyCurve entropy_curve(const GaussianSpread& spread, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("invalid n range");
    EntropyCurve curve;
    curve.values.reserve(n_hi - n_lo + 1);
    for (int n = n_lo; n <= n_hi; ++n)
        curve.values.emplace_back(n, von_neumann_entropy(rdm_closed_form(spread, n).rho_full));
    return curve;
}

EntropyCurve entropy_curve(const SuperpositionSpec& spec, int n_lo, int n_hi,
                           const quad::Options& opts) {
    spec.validate();
    if (n_lo < 1 || n_hi < n_lo || n_hi > spec.n_particles)
        throw std::invalid_argument("invalid n range");
    EntropyCurve curve;
    curve.values.reserve(n_hi - n_lo + 1);
    for (int n = n_lo; n <= n_hi; ++n)
        curve.values.emplace_back(n, von_neumann_entropy(rdm_finite_n(spec, n, opts).rho_full));
    return curve;
}

DisconnectivityResult disconnectivity(const EntropyCurve& curve, double threshold) {
    if (curve.values.empty()) throw std::invalid_argument("empty entropy curve");
    const int n_max = static_cast<int>(curve.values.size());
    std::vector<double> s(n_max + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        const auto& [idx, val] = curve.values[n - 1];
        if (idx != n) throw std::invalid_argument("entropy curve must cover n = 1..N without gaps");
        s[n] = val;
    }

    // entropies at quadrature noise level count as zero for the ratio logic
    constexpr double kZero = 1e-12;

    DisconnectivityResult res;
    res.threshold = threshold;
    res.betas.emplace_back(1, 0.0);
    res.d_value = 1;
    for (int n = 2; n <= n_max; ++n) {
        double denom = s[1] + s[n - 1];
        for (int m = 2; m < n; ++m) denom = std::min(denom, s[m] + s[n - m]);
        double beta;
        if (denom < kZero)
            beta = (s[n] < kZero) ? 1.0 : s[n] / denom;
        else
            beta = s[n] / denom;
        res.betas.emplace_back(n, beta);
        if (beta < threshold) res.d_value = n;
    }
    return res;
}

DisconnectivityResult fock_disconnectivity(const FockOccupation& occ, double threshold) {
    occ.validate();
    const int n_total = static_cast<int>(occ.total());
    EntropyCurve curve;
    curve.values.reserve(n_total);
    for (int n = 1; n <= n_total; ++n)
        curve.values.emplace_back(n, von_neumann_entropy(fock_rdm(occ, n)));
    return disconnectivity(curve, threshold);
}

} // namespace catsize
