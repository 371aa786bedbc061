#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "catsize/errors.hpp"

namespace catsize::quad {

struct Options {
    double rel_tol = 1e-10;   // relative to the max-norm of the running estimate
    double abs_tol = 1e-300;  // absolute floor, only relevant for all-zero integrals
    int max_depth = 40;       // bisection depth, 1-D
    int max_depth_2d = 14;    // quadtree depth, 2-D
};

// Integrands write one value per component; the component count is fixed by
// the caller so that a whole family of integrals (e.g. all entries of a
// matrix) shares a single adaptive refinement.
using Integrand1D = std::function<void(double, std::span<std::complex<double>>)>;
using Integrand2D = std::function<void(double, double, std::span<std::complex<double>>)>;

// Adaptive Gauss-Legendre panels over [a, b]. Panels are bisected until the
// panel estimate agrees with the sum of its children within the (scaled)
// tolerance. Throws QuadratureError when max_depth is hit, carrying the
// achieved estimate.
std::vector<std::complex<double>> integrate(const Integrand1D& f, double a, double b,
                                            int components, const Options& opts = {});

// Tensor-product Gauss-Legendre panels on rectangles, refined by quartering.
std::vector<std::complex<double>> integrate2d(const Integrand2D& f,
                                              double ax, double bx,
                                              double ay, double by,
                                              int components, const Options& opts = {});

// x^n for integer n >= 0 by repeated squaring (handles negative bases exactly).
double ipow(double x, long n);

} // namespace catsize::quad
