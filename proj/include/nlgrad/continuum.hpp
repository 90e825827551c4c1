#pragma once

#include <functional>
#include <vector>

#include "nlgrad/kernel.hpp"
#include "nlgrad/lattice.hpp"

namespace nlgrad {

/// Compactly supported callable field; evaluations outside (-R, R) are
/// clamped to zero.
struct SampledField {
    std::function<double(double)> fn;
    double R = 1.0;

    double operator()(double x) const { return (x > -R && x < R) ? fn(x) : 0.0; }
};

/// Cell means of a field on the (eps/M)-lattice together with their
/// difference quotients.
struct AveragePipeline {
    double eps;
    int M;
    LatticeFunction1D averages;   // mean of u over cell ((j-1)h, jh], h = eps/M
    LatticeFunction1D quotients;  // (averages_j - averages_{j-1}) / h
};

/// Scaled continuum nonlocal gradient at x:
///   int_0^{eps*S} rho_eps(xi) (u(x+xi) - u(x-xi)) dxi,  rho_eps = (1/eps) rho(./eps),
/// by adaptive quadrature with dyadic refinement toward xi = 0 for singular
/// kernels. abs_tol is the quadrature target.
double continuum_gradient(const SampledField& u, const ContinuumKernel& k, double eps, double x,
                          double abs_tol = 1e-8);

struct RieszCounterexample {
    double energy = 0.0;      // int_{-R}^{R} |grad_{rho_eps} u_eps|^2 dy
    double bound = 0.0;       // 4 R c(alpha)^2 eps^(1-alpha), c = 4/(1-alpha) + 2/alpha
    double dirichlet = 0.0;   // int_{-R}^{R} |u_eps'|^2 dt
};

/// The oscillating family u_eps(t) = eps^2 sin(t/eps^2) min{1, (R-|t|)+} under
/// the Riesz kernel |xi|^(-1-alpha). Evaluated with an oscillation-aware
/// quadrature (exact phase algebra against slowly varying envelopes), so the
/// whole eps sweep stays cheap.
RieszCounterexample riesz_counterexample(double alpha, double R, double eps);

/// The same oscillating field, exposed for cross-checks against the generic
/// quadrature path.
SampledField riesz_oscillating_field(double R, double eps);

/// Cell means (M/eps) * int over each (eps/M)-cell, each cell integrated by
/// Gauss-Legendre; quotients derived exactly from the means.
AveragePipeline cell_averages(const SampledField& u, double eps, int M);

/// Max over lattice points eps*k/M of |continuum gradient with the
/// piecewise-constant kernel - (eps/M^2) * discrete gradient of the cell
/// means|. The (eps/M^2) factor bridges the two normalizations; the identity
/// is exact in exact arithmetic, so the result is pure quadrature error.
double discrete_continuum_identity(const SampledField& u, const DiscreteKernel& rhoM, double eps,
                                   double quad_tol = 1e-9);

struct EquicoercivityCertificate {
    double lattice_energy = 0.0;   // sum_k (eps/M) ((1/eps) grad at eps k/M)^2
    double dirichlet = 0.0;        // Dirichlet energy of the means at spacing eps/M
    double lambda_min = 0.0;       // from the circulant of rho^M at 2 N_eps + 2M + 1
    double constant = 0.0;         // (lambda_min / M^2)^2
    double ratio = 0.0;
    bool pass = false;
};

/// Verifies the chain  lattice_energy >= (lambda_min/M^2)^2 * dirichlet for
/// the cell means of u under the discretized kernel.
EquicoercivityCertificate equicoercivity_check(const SampledField& u, const DiscreteKernel& rhoM,
                                               double eps);

}  // namespace nlgrad
