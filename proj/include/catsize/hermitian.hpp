#pragma once

#include <complex>
#include <vector>

namespace catsize {

// Dense square complex matrix indexed (k, l), k = row. All reduced density
// matrices in this library use the occupation-count index convention: index
// k counts quanta in the first of the two rotated modes.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }

    std::complex<double>& operator()(int k, int l) {
        return a_[static_cast<std::size_t>(k) * dim_ + l];
    }
    const std::complex<double>& operator()(int k, int l) const {
        return a_[static_cast<std::size_t>(k) * dim_ + l];
    }

    double trace_real() const;
    double max_hermiticity_violation() const;

    // Rescales so that the real trace becomes 1. Throws std::domain_error if
    // the current trace is smaller than `floor` in magnitude.
    void normalize_trace(double floor = 1e-300);

    HermitianMatrix operator-(const HermitianMatrix& other) const;

    // Eigenvalues by cyclic Jacobi sweeps, ascending order. The off-diagonal
    // Frobenius norm is driven below 1e-13 (relative to the matrix scale).
    std::vector<double> eigenvalues() const;

    double trace_norm() const;     // sum of |eigenvalue|
    double min_eigenvalue() const;

private:
    int dim_ = 0;
    std::vector<std::complex<double>> a_;
};

} // namespace catsize
