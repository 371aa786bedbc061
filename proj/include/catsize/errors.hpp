#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace catsize {

// Thrown when adaptive quadrature fails to reach its tolerance at the
// maximum refinement depth. Carries the best estimate obtained so far
// together with the achieved error bound.
// Input distribution fails its normalization tolerance.
class NormalizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what,
                    std::vector<std::complex<double>> achieved,
                    double error_estimate)
        : std::runtime_error(what),
          achieved_(std::move(achieved)),
          error_estimate_(error_estimate) {}

    const std::vector<std::complex<double>>& achieved() const { return achieved_; }
    double error_estimate() const { return error_estimate_; }

private:
    std::vector<std::complex<double>> achieved_;
    double error_estimate_;
};

} // namespace catsize
