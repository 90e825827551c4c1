#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "nlgrad/kernel.hpp"
#include "nlgrad/lattice.hpp"

namespace nlgrad {

/// Selects between the raw stencil and its rewriting as a combination of
/// nearest-neighbour difference quotients with tail-sum coefficients.
enum class StencilForm { direct, difference_quotient };

/// Scaled discrete nonlocal gradient
///   v_k = (1/eps) * ( -sum_i rho_i u_{k+1-i} + sum_i rho_i u_{k+i} ).
/// The output window is the support of u widened by M on the left and M-1 on
/// the right, exactly the sites where v can be nonzero.
LatticeFunction1D nonlocal_gradient(const LatticeFunction1D& u, const DiscreteKernel& k,
                                    StencilForm form = StencilForm::difference_quotient);

/// Same stencil over arbitrary positive weights (no strict-decrease check);
/// this is what the constant-kernel oscillation counterexample needs.
LatticeFunction1D nonlocal_gradient_raw(const LatticeFunction1D& u, std::span<const double> weights,
                                        StencilForm form = StencilForm::direct);

/// The formally symmetric variant
///   v_k = (1/eps) * sum_i rho_i (u_{k+i} - u_{k-i}),
/// summed pairwise so that even data cancels term by term. Kept only to
/// exhibit its failure on oscillating inputs.
LatticeFunction1D nonlocal_gradient_symmetric(const LatticeFunction1D& u,
                                              std::span<const double> weights);
LatticeFunction1D nonlocal_gradient_symmetric(const LatticeFunction1D& u, const DiscreteKernel& k);

/// u_k = (-1)^k on [first, last); requires even M (the stencil half-width the
/// counterexample is aimed at). The constant-weight gradient of this function
/// vanishes at all sites at distance >= M from the window boundary.
LatticeFunction1D oscillation_null_vector(int M, std::int64_t first, std::int64_t last,
                                          double spacing = 1.0);

/// Returns the pair
///   ( sum_k eps (u'_rho)_k phi_k ,  -sum_k eps u_k (phi'_rho)_{k-1} ).
/// The two numbers agree exactly (discrete adjoint identity with a one-site
/// shift on the right factor).
std::pair<double, double> summation_by_parts(const LatticeFunction1D& u, const LatticeFunction1D& phi,
                                             const DiscreteKernel& k);

}  // namespace nlgrad
