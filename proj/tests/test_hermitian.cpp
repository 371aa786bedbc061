#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "catsize/hermitian.hpp"

using namespace catsize;
using cplx = std::complex<double>;

namespace {

HermitianMatrix random_hermitian(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    HermitianMatrix m(dim);
    for (int k = 0; k < dim; ++k) {
        m(k, k) = g(rng);
        for (int l = k + 1; l < dim; ++l) {
            m(k, l) = cplx(g(rng), g(rng));
            m(l, k) = std::conj(m(k, l));
        }
    }
    return m;
}

} // namespace

TEST_CASE("known 2x2 spectra") {
    HermitianMatrix m(2);
    m(0, 0) = 1.0;
    m(0, 1) = cplx(0.0, 1.0);
    m(1, 0) = cplx(0.0, -1.0);
    m(1, 1) = 1.0;
    const auto ev = m.eigenvalues();
    CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-13));

    HermitianMatrix s(2);
    s(0, 1) = cplx(0.0, -1.0);
    s(1, 0) = cplx(0.0, 1.0);
    CHECK(s.trace_norm() == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(s.min_eigenvalue() == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("spectral invariants on random matrices") {
    for (int dim : {3, 8, 33}) {
        const auto m = random_hermitian(dim, 17 + dim);
        double tr = 0.0, fro2 = 0.0;
        for (int k = 0; k < dim; ++k) {
            tr += m(k, k).real();
            for (int l = 0; l < dim; ++l) fro2 += std::norm(m(k, l));
        }
        const auto ev = m.eigenvalues();
        double sum = 0.0, sum2 = 0.0;
        for (double e : ev) {
            sum += e;
            sum2 += e * e;
        }
        CHECK(sum == doctest::Approx(tr).epsilon(1e-10));
        CHECK(sum2 == doctest::Approx(fro2).epsilon(1e-10));
    }
}

TEST_CASE("trace norm of a pure-state difference") {
    // |a><a| - |b><b| with <a|b> = c has trace norm 2 sqrt(1 - c^2)
    const double c = 0.3, s = std::sqrt(1.0 - c * c);
    HermitianMatrix d(2);
    d(0, 0) = 1.0 - c * c;
    d(0, 1) = -c * s;
    d(1, 0) = -c * s;
    d(1, 1) = -s * s;
    CHECK(d.trace_norm() == doctest::Approx(2.0 * s).epsilon(1e-12));
}

TEST_CASE("hermiticity violation detection and trace normalization") {
    HermitianMatrix m(2);
    m(0, 0) = 2.0;
    m(1, 1) = 2.0;
    m(0, 1) = cplx(0.0, 0.5);
    m(1, 0) = cplx(0.0, 0.5);  // wrong sign
    CHECK(m.max_hermiticity_violation() > 0.9);

    m(1, 0) = cplx(0.0, -0.5);
    CHECK(m.max_hermiticity_violation() == 0.0);
    m.normalize_trace();
    CHECK(m.trace_real() == doctest::Approx(1.0));

    HermitianMatrix z(3);
    CHECK_THROWS_AS(z.normalize_trace(), std::domain_error);
}

TEST_CASE("large dense matrix keeps invariants") {
    const auto m = random_hermitian(101, 99);
    const auto ev = m.eigenvalues();
    double tr = 0.0;
    for (int k = 0; k < 101; ++k) tr += m(k, k).real();
    double sum = 0.0;
    for (double e : ev) sum += e;
    CHECK(sum == doctest::Approx(tr).epsilon(1e-9));
}
