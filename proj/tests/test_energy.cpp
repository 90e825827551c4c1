#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "nlgrad/energy.hpp"
#include "nlgrad/errors.hpp"

using namespace nlgrad;

TEST_CASE("dirichlet energy of a point mass") {
    const LatticeFunction1D u({1.0}, 0, 1.0);
    CHECK(dirichlet_energy(u) == doctest::Approx(2.0));  // jumps up and back down

    const LatticeFunction1D v({1.0}, 0, 0.5);
    CHECK(dirichlet_energy(v) == doctest::Approx(4.0));  // eps * (1/eps)^2 * 2
}

TEST_CASE("quadratic energy of a point mass, kernel [2,1]") {
    const DiscreteKernel k = validate_discrete({2.0, 1.0});
    const LatticeFunction1D u({1.0}, 0, 1.0);
    // gradient values are (1, 2, -2, -1)
    CHECK(quadratic_energy(u, k) == doctest::Approx(10.0));

    const EnergyDensity f = EnergyDensity::quadratic();
    CHECK(general_energy(u, k, f) == doctest::Approx(quadratic_energy(u, k)).epsilon(1e-14));
}

TEST_CASE("general energy respects the growth sandwich") {
    const DiscreteKernel k = validate_discrete({3.0, 2.0, 1.0});
    // f(z) = z^2 + |z| with 1*z^2 <= f(z) <= 2*z^2 + 1/4... use the cosh-like bound
    const EnergyDensity f{[](double z) { return z * z + std::abs(z); }, 0.0, 1.0, 1.5, 0.5};

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> vals(24);
        for (auto& v : vals) v = dist(rng);
        const LatticeFunction1D u(std::move(vals), -12, 0.25);
        const double quad = quadratic_energy(u, k);
        const double gen = general_energy(u, k, f);
        CHECK(gen >= f.c1 * quad + 0.0 - 1e-12);
        // upper bound needs the window length for the constant term; here c3
        // multiplies the summation window measure, so just check c1 side and
        // monotonicity against the plain quadratic
        CHECK(gen >= quad - 1e-12);
    }
}

TEST_CASE("coercivity certificate, kernel [2,1]") {
    const DiscreteKernel k = validate_discrete({2.0, 1.0});

    // eps >= 1/(2M) is outside the coercive regime
    CHECK_THROWS_AS(coercivity_check(LatticeFunction1D({1.0}, 0, 0.5), k), EpsilonTooLarge);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> vals(64);
        for (auto& v : vals) v = dist(rng);
        const LatticeFunction1D u(std::move(vals), -32, 1.0 / 512.0);
        const CoercivityCertificate cert = coercivity_check(u, k);
        CHECK(cert.Lambda == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(cert.Lambda >= cert.Lambda_bound - 1e-12);
        CHECK(cert.pass);
        CHECK(cert.F_eps >= cert.lambda_times_dirichlet - 1e-10 * (1.0 + cert.F_eps));
    }

    const CoercivityCertificate zero = coercivity_check(LatticeFunction1D({0.0}, 0, 1.0 / 8.0), k);
    CHECK(zero.pass);
}

TEST_CASE("gamma target for the quartic bump") {
    const DiscreteKernel k = validate_discrete({2.0, 1.0});
    const SmoothFunction u{[](double x) { return (1.0 - x * x) * (1.0 - x * x); },
                           [](double x) { return -4.0 * x * (1.0 - x * x); }, -1.0, 1.0};
    // int (5 u')^2 = 25 * 16 * int x^2 (1-x^2)^2 = 25 * 16 * 16/105
    CHECK(gamma_target(u, k, EnergyDensity::quadratic()) ==
          doctest::Approx(6400.0 / 105.0).epsilon(1e-10));
}

TEST_CASE("discrete energies approach the gamma target") {
    const DiscreteKernel k = validate_discrete({2.0, 1.0});
    const EnergyDensity f = EnergyDensity::quadratic();
    const SmoothFunction uf{[](double x) { return (1.0 - x * x) * (1.0 - x * x); },
                            [](double x) { return -4.0 * x * (1.0 - x * x); }, -1.0, 1.0};
    const double target = gamma_target(uf, k, f);

    double prev = 1e300;
    for (int p = 4; p <= 8; ++p) {
        const double eps = std::ldexp(1.0, -p);
        const auto half = static_cast<std::int64_t>(std::ceil(1.0 / eps));
        std::vector<double> vals(static_cast<std::size_t>(2 * half + 1), 0.0);
        for (std::int64_t j = -half; j <= half; ++j) {
            const double x = eps * static_cast<double>(j);
            if (x > -1.0 && x < 1.0) vals[static_cast<std::size_t>(j + half)] = uf.value(x);
        }
        const double err = std::abs(general_energy(LatticeFunction1D(vals, -half, eps), k, f) - target);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev / target < 1e-3);
}

TEST_CASE("loglog slope recovers power laws") {
    std::vector<double> x{1.0, 0.5, 0.25, 0.125};
    std::vector<double> y2, y1;
    for (double v : x) {
        y2.push_back(3.0 * v * v);
        y1.push_back(0.7 * v);
    }
    CHECK(loglog_slope(x, y2) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(loglog_slope(x, y1) == doctest::Approx(1.0).epsilon(1e-12));
}
