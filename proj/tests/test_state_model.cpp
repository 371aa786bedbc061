#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "catsize/state_model.hpp"
#include "oracles.hpp"

using namespace catsize;
using std::numbers::pi;
using cplx = std::complex<double>;

TEST_CASE("branch overlap, delta spread") {
    for (int n : {1, 3, 8}) {
        CHECK(std::abs(branch_overlap({n, {0.0, 0.0}})) < 1e-14);
        CHECK(branch_overlap({n, {pi / 4, 0.0}}).real() == doctest::Approx(1.0));
    }
}

TEST_CASE("branch overlap vs dense construction (N=8, theta0=pi/8, sigma=0.05pi)") {
    const SuperpositionSpec spec{8, {pi / 8, 0.05 * pi}};
    const cplx got = branch_overlap(spec);

    const auto a = oracles::dense_branch_a(spec);
    const auto b = oracles::dense_branch_b(spec);
    const cplx expected = oracles::inner(a, b) /
                          std::sqrt(oracles::inner(a, a).real() * oracles::inner(b, b).real());
    // frozen from the dense Fock-basis oracle
    CHECK(expected.real() == doctest::Approx(0.234422751813727).epsilon(1e-9));
    CHECK(std::abs(got - expected) < 1e-9);
    CHECK(std::abs(got.imag()) < 1e-10);
}

TEST_CASE("number distribution, trivial cases") {
    const auto d1 = number_distribution({1, {0.0, 0.0}});
    REQUIRE(d1.probs.size() == 2);
    CHECK(d1.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d1.probs[1] == doctest::Approx(0.5).epsilon(1e-12));

    const auto d2 = number_distribution({2, {0.0, 0.0}});
    REQUIRE(d2.probs.size() == 3);
    CHECK(d2.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d2.probs[1] == doctest::Approx(0.0));
    CHECK(d2.probs[2] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("number distribution matches dense oracle and is bimodal (N=40)") {
    const SuperpositionSpec spec{40, {0.05 * pi, 0.010 * pi}};
    const auto dist = number_distribution(spec);
    REQUIRE(dist.probs.size() == 41);

    const auto a = oracles::dense_branch_a(spec);
    const auto b = oracles::dense_branch_b(spec);
    double norm = 0.0;
    std::vector<double> expected(41);
    for (int k = 0; k <= 40; ++k) {
        expected[k] = std::norm(a[k] + b[k]);
        norm += expected[k];
    }
    for (int k = 0; k <= 40; ++k) {
        expected[k] /= norm;
        CHECK(dist.probs[k] == doctest::Approx(expected[k]).epsilon(1e-7).scale(1.0));
    }

    // bimodal: peaks near the edges, depleted middle
    CHECK(dist.probs[0] + dist.probs[1] + dist.probs[2] > 10.0 * dist.probs[20]);
    CHECK(dist.probs[20] < 0.01);
    CHECK(dist.probs[0] > dist.probs[20]);
    CHECK(dist.probs[40] > dist.probs[20]);
}

TEST_CASE("number distribution properties over a parameter sample") {
    for (const auto& [n, t0, sg] : {std::tuple{5, 0.3, 0.1}, {17, -0.7, 0.02},
                                    {23, 0.12, 0.3}, {40, 0.0, 0.005 * pi}}) {
        const auto dist = number_distribution({n, {t0, sg}});
        CHECK(std::abs(dist.sum() - 1.0) < 1e-10);
        for (int k = 0; k <= n; ++k)
            CHECK(dist.probs[k] == doctest::Approx(dist.probs[n - k]).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("sigma=0 overlap decreases monotonically in N") {
    for (double t0 : {pi / 8, 0.1, -0.3}) {
        double prev = 1.0;
        for (int n : {2, 4, 8, 16, 32}) {
            const double o = std::abs(branch_overlap({n, {t0, 0.0}}));
            CHECK(o < prev + 1e-15);
            prev = o;
        }
        CHECK(prev < 0.05);  // heads to zero
    }
}

TEST_CASE("sigma>0 overlap approaches a positive limit") {
    // theta0 close enough to pi/4 that the limiting overlap dominates the
    // finite-N corrections at N ~ 100
    for (const auto& [t0, sg] : {std::pair{0.2 * pi, 0.05 * pi}, {0.1 * pi, 0.1 * pi}}) {
        const double o64 = std::abs(branch_overlap({64, {t0, sg}}));
        const double o128 = std::abs(branch_overlap({128, {t0, sg}}));
        CHECK(o128 > 0.01);
        CHECK(std::abs(o64 - o128) < 0.1 * o128);
    }
}

TEST_CASE("distillation probability") {
    CHECK(distillation_probability(0.3, 1.0) == doctest::Approx(1.0));
    CHECK(distillation_probability(0.99, 0.0) == doctest::Approx(0.0));

    // overlap 0, g = 1/sqrt2: explicit Kraus evaluation on a two-dimensional
    // model gives ||A1 |Psi>||^2 = g^2 (2 + 2c) / (1 + g^2 + 2 g c) = 2/3
    CHECK(distillation_probability(0.0, 1.0 / std::sqrt(2.0)) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // monotone nondecreasing in |g| at fixed real overlap, and within [0,1]
    for (double c : {0.0, 0.4, 0.9, -0.5}) {
        double prev = 0.0;
        for (int i = 0; i <= 50; ++i) {
            const double g = i / 50.0;
            const double p = distillation_probability(c, g);
            CHECK(p >= prev - 1e-12);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0 + 1e-12);
            prev = p;
        }
    }

    CHECK_THROWS_AS(distillation_probability(-1.0, 1.0), std::domain_error);
}

TEST_CASE("spread validation") {
    CHECK_THROWS_AS(branch_overlap({0, {0.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(branch_overlap({3, {2.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(branch_overlap({3, {0.0, -0.1}}), std::invalid_argument);
}
