#include <cmath>

#include "doctest.h"
#include "nlgrad/errors.hpp"
#include "nlgrad/quadrature.hpp"

using namespace nlgrad;

TEST_CASE("gauss rules have the right shape") {
    CHECK(quad::gauss7().nodes.size() == 7);
    CHECK(quad::gauss15().nodes.size() == 15);

    // weights integrate the constant 1 over [-1,1]
    double s7 = 0.0, s15 = 0.0;
    for (double w : quad::gauss7().weights) s7 += w;
    for (double w : quad::gauss15().weights) s15 += w;
    CHECK(s7 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s15 == doctest::Approx(2.0).epsilon(1e-14));

    // nodes are symmetric about 0
    const auto& n = quad::gauss15().nodes;
    for (std::size_t i = 0; i < n.size(); ++i)
        CHECK(n[i] == doctest::Approx(-n[n.size() - 1 - i]).epsilon(1e-14));
}

TEST_CASE("gauss7 is exact through degree 13") {
    // int_0^1 x^13 dx = 1/14
    const double v = quad::gauss7().apply([](double x) { return std::pow(x, 13); }, 0.0, 1.0);
    CHECK(std::abs(v - 1.0 / 14.0) < 1e-15);
}

TEST_CASE("adaptive integrate: smooth integrands") {
    const double pi = std::acos(-1.0);
    CHECK(quad::integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(quad::integrate([](double x) { return std::exp(x); }, 0.0, 1.0) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
}

TEST_CASE("breakpoints handle interior kinks") {
    quad::Options opt;
    opt.breakpoints = {0.3};
    const double v = quad::integrate([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0, opt);
    // 0.3^2/2 + 0.7^2/2
    CHECK(v == doctest::Approx(0.29).epsilon(1e-13));
}

TEST_CASE("dyadic refinement integrates an endpoint singularity") {
    quad::Options opt;
    opt.singular_left = true;
    const double v = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-9));

    // the Riesz-type profile used by the counterexample module
    const double alpha = 0.5;
    const double w =
        quad::integrate([alpha](double x) { return std::pow(x, -alpha); }, 0.0, 1.0, opt);
    CHECK(w == doctest::Approx(1.0 / (1.0 - alpha)).epsilon(1e-9));
}

TEST_CASE("non-integrable singularity is reported, not silently mangled") {
    quad::Options opt;
    opt.rel_tol = 1e-10;
    CHECK_THROWS_AS(quad::integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, opt),
                    QuadratureNonConvergent);
}
