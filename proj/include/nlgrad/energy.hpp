#pragma once

#include <functional>

#include "nlgrad/grad1d.hpp"
#include "nlgrad/kernel.hpp"
#include "nlgrad/lattice.hpp"
#include "nlgrad/spectral.hpp"

namespace nlgrad {

/// Convex integrand with quadratic growth c1 z^2 + c0 <= f(z) <= c2 z^2 + c3.
struct EnergyDensity {
    std::function<double(double)> f;
    double c0 = 0.0, c1 = 1.0, c2 = 1.0, c3 = 0.0;

    static EnergyDensity quadratic() {
        return EnergyDensity{[](double z) { return z * z; }, 0.0, 1.0, 1.0, 0.0};
    }
};

/// Smooth test function descriptor for the limit functional.
struct SmoothFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    double a = -1.0, b = 1.0;  // support interval
};

/// sum_k eps |(u_{k+1} - u_k)/eps|^2, the classical yardstick energy.
double dirichlet_energy(const LatticeFunction1D& u);

/// F_eps(u) = sum_k eps |(u'_{rho_eps})_k|^2.
double quadratic_energy(const LatticeFunction1D& u, const DiscreteKernel& k);

/// sum_k eps f((u'_{rho_eps})_k) over the gradient's exact support window
/// (support of u widened by M left, M-1 right). For f(0) != 0 the constant
/// tail over the rest of the lattice is deliberately excluded.
double general_energy(const LatticeFunction1D& u, const DiscreteKernel& k, const EnergyDensity& f);

struct CoercivityCertificate {
    double F_eps = 0.0;
    double dirichlet = 0.0;
    double Lambda = 0.0;           // exact (lambda_min)^2 at the working N
    double Lambda_bound = 0.0;     // cruder N-independent analytic value
    double lambda_times_dirichlet = 0.0;
    double ratio = 0.0;            // F_eps / (Lambda * dirichlet), inf-safe
    bool pass = false;
};

/// Verifies F_eps(u) >= Lambda * dirichlet(u) with Lambda from the circulant
/// minimum at N = ceil(1/eps) + 4M. Requires eps < 1/(2M).
CoercivityCertificate coercivity_check(const LatticeFunction1D& u, const DiscreteKernel& k);

/// Limit value int_a^b f(K u'(t)) dt with K = gamma_constant(k), by adaptive
/// quadrature to 1e-10 relative tolerance.
double gamma_target(const SmoothFunction& u, const DiscreteKernel& k, const EnergyDensity& f);

/// Least-squares slope of log(y) against log(x); the convergence-order fit
/// used by the sweep reports.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace nlgrad
