#include "catsize/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catsize {

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (int k = 0; k < dim_; ++k) t += (*this)(k, k).real();
    return t;
}

double HermitianMatrix::max_hermiticity_violation() const {
    double m = 0.0;
    for (int k = 0; k < dim_; ++k)
        for (int l = k; l < dim_; ++l)
            m = std::max(m, std::abs((*this)(k, l) - std::conj((*this)(l, k))));
    return m;
}

void HermitianMatrix::normalize_trace(double floor) {
    const double t = trace_real();
    if (std::abs(t) < floor) throw std::domain_error("matrix trace too small to normalize");
    for (auto& z : a_) z /= t;
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
    HermitianMatrix r(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - other.a_[i];
    return r;
}

std::vector<double> HermitianMatrix::eigenvalues() const {
    const int n = dim_;
    std::vector<std::complex<double>> m(a_);
    auto at = [&](int i, int j) -> std::complex<double>& {
        return m[static_cast<std::size_t>(i) * n + j];
    };

    double scale = 0.0;
    for (const auto& z : m) scale = std::max(scale, std::abs(z));
    if (scale == 0.0 || n == 1) {
        std::vector<double> ev(n);
        for (int i = 0; i < n; ++i) ev[i] = at(i, i).real();
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    const double threshold = 1e-13 * scale;

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(at(p, q));
        if (std::sqrt(off) <= threshold) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const std::complex<double> apq = at(p, q);
                const double mag = std::abs(apq);
                if (mag <= threshold / (n * n)) continue;

                // unitary 2x2 rotation that annihilates the (p,q) entry
                const double app = at(p, p).real();
                const double aqq = at(q, q).real();
                const std::complex<double> phase = apq / mag;
                const double tau = (app - aqq) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const std::complex<double> sp = s * phase;

                for (int i = 0; i < n; ++i) {
                    const std::complex<double> aip = at(i, p);
                    const std::complex<double> aiq = at(i, q);
                    at(i, p) = c * aip + std::conj(sp) * aiq;
                    at(i, q) = -sp * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const std::complex<double> apj = at(p, j);
                    const std::complex<double> aqj = at(q, j);
                    at(p, j) = c * apj + sp * aqj;
                    at(q, j) = -std::conj(sp) * apj + c * aqj;
                }
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double HermitianMatrix::trace_norm() const {
    double s = 0.0;
    for (double ev : eigenvalues()) s += std::abs(ev);
    return s;
}

double HermitianMatrix::min_eigenvalue() const {
    const auto ev = eigenvalues();
    return ev.empty() ? 0.0 : ev.front();
}

} // namespace catsize
