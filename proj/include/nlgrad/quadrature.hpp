#pragma once

#include <functional>
#include <vector>

namespace nlgrad::quad {

/// Gauss-Legendre nodes/weights on [-1,1], computed once per order by
/// Newton iteration on the Legendre polynomial.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussRule(int order);

    /// Apply the rule on [a,b].
    double apply(const std::function<double(double)>& f, double a, double b) const;
};

const GaussRule& gauss7();
const GaussRule& gauss15();

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    int max_depth = 52;
    /// Points where the integrand is non-smooth; the interval is pre-split there.
    std::vector<double> breakpoints;
    /// When true, the left endpoint is (integrably) singular: the first
    /// subinterval is pre-split dyadically toward it down to `dyadic_floor`
    /// times the interval length.
    bool singular_left = false;
    double dyadic_floor = 1e-12;
};

/// Adaptive composite Gauss-Legendre on [a,b]. Nodes are interior, so
/// integrable endpoint singularities never get evaluated at the endpoint.
/// Throws QuadratureNonConvergent if the refinement budget is exhausted
/// with an error estimate far above tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = Options{});

}  // namespace nlgrad::quad
