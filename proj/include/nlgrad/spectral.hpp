#pragma once

#include <vector>

#include "nlgrad/kernel.hpp"

namespace nlgrad {

/// Symmetric n-banded circulant matrix, stored by its band values
/// sigma_0..sigma_n and dimension N (N > 2n).
struct CirculantSpec {
    std::vector<double> sigma;
    int N;

    CirculantSpec(std::vector<double> band, int dim);
    int n() const { return static_cast<int>(sigma.size()) - 1; }
    /// Band value with the convention sigma_j = 0 beyond the band.
    double band(int j) const {
        return (j >= 0 && j < static_cast<int>(sigma.size())) ? sigma[static_cast<std::size_t>(j)] : 0.0;
    }
};

struct SymbolAnalysis {
    std::vector<double> fejer_coeffs;  // sigma_{j-1} - 2 sigma_j + sigma_{j+1}, j = 1..n+1
    double min_phi_bound = 0.0;        // analytic lower bound sigma_0 - 2 sigma_1 + sigma_2
    double lambda_min = 0.0;           // exact minimal circulant eigenvalue
    double coercivity_Lambda = 0.0;    // lambda_min^2
    double n_independent_Lambda = 0.0; // (sigma_0 - 2 sigma_1 + sigma_2)^2
};

/// Bands are the tail sums of the kernel (n = M-1); requires N > 2(M-1).
CirculantSpec circulant_from_kernel(const DiscreteKernel& k, int N);

/// Phi(t) = sigma_0 + 2 sum_j sigma_j cos(jt), the symbol whose range bounds
/// the circulant/Toeplitz spectrum.
double symbol_phi(const CirculantSpec& spec, double t);

/// (1 - cos(jt)) / (1 - cos t), evaluated through its cosine-sum closed form
/// near t = 0 where the quotient is 0/0.
double fejer_kernel(int j, double t);

/// Second-difference coefficients of the Fejer rewriting of Phi; throws
/// ConvexityViolated (naming the failing j) if any is not strictly positive.
std::vector<double> fejer_decomposition(const CirculantSpec& spec);

/// Phi reconstructed from the Fejer coefficients; equals symbol_phi when the
/// decomposition exists.
double fejer_reconstruct(const std::vector<double>& coeffs, double t);

/// Minimum of Phi over [0, pi]: uniform grid (>= 1024 points) refined by
/// golden-section descent around the grid minimizer to 1e-12.
double min_symbol(const CirculantSpec& spec, int grid_points = 4096);

/// Exact eigenvalues { Phi(2 pi k / N) : k = 0..N-1 }, sorted ascending.
std::vector<double> circulant_eigenvalues(const CirculantSpec& spec);

/// Materializes the dense matrix and runs cyclic Jacobi sweeps to
/// off-diagonal norm <= 1e-12; independent check of the symbol route. N <= 64.
std::vector<double> dense_eig_oracle(const CirculantSpec& spec);

/// Full certificate for a kernel at dimension N: exact lambda_min from the
/// circulant angles plus the N-independent analytic bound.
SymbolAnalysis coercivity_constant(const DiscreteKernel& k, int N);

}  // namespace nlgrad
