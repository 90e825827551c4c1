#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nlgrad {

enum class KernelKind { tent, truncated_riesz, tabulated, step };

enum class Convention { left, midpoint };

/// Even kernel stored by its radial profile r -> rho(r), zero beyond the
/// support radius. Immutable after construction.
class ContinuumKernel {
public:
    /// rho(r) = max(support - r, 0).
    static ContinuumKernel tent(double support = 1.0);
    /// rho(r) = r^(-1-alpha) for r <= support, 0 beyond. alpha in (0,1) for
    /// the theory; larger alpha is representable but not integrable against |xi|.
    static ContinuumKernel truncated_riesz(double alpha, double support = 1.0);
    /// Piecewise-linear interpolation of (radius, value) samples, nonincreasing.
    static ContinuumKernel tabulated(std::vector<double> radii, std::vector<double> values);
    /// Piecewise-constant profile with value weights[i-1] on ((i-1)/M, i/M] * support.
    /// This is the rho^M of the cell-average pipeline.
    static ContinuumKernel step(std::vector<double> weights, double support = 1.0);

    double operator()(double r) const { return profile_(r); }
    double support_radius() const { return support_; }
    KernelKind kind() const { return kind_; }
    double alpha() const { return alpha_; }

    /// Radii where the profile is non-smooth (quadrature split points).
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    /// True when rho(r) -> infinity as r -> 0 (Riesz-type profiles).
    bool singular_at_zero() const { return kind_ == KernelKind::truncated_riesz; }

private:
    ContinuumKernel(KernelKind kind, std::function<double(double)> profile, double support,
                    std::vector<double> breakpoints, double alpha = 0.0)
        : kind_(kind), profile_(std::move(profile)), support_(support),
          breakpoints_(std::move(breakpoints)), alpha_(alpha) {}

    KernelKind kind_;
    std::function<double(double)> profile_;
    double support_;
    std::vector<double> breakpoints_;
    double alpha_;
};

/// Strictly decreasing positive stencil weights rho_1..rho_M with cached
/// tail sums sigma_j = sum_{k=j+1}^M rho_k, j = 0..M-1.
class DiscreteKernel {
public:
    int M() const { return static_cast<int>(weights_.size()); }
    const std::vector<double>& weights() const { return weights_; }
    double weight(int i) const { return weights_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    const std::vector<double>& tail_sums() const { return sigma_; }
    /// sigma_j with the convention sigma_j = 0 for j >= M.
    double sigma(int j) const {
        return (j >= 0 && j < M()) ? sigma_[static_cast<std::size_t>(j)] : 0.0;
    }

    friend DiscreteKernel validate_discrete(const std::vector<double>& weights);

private:
    explicit DiscreteKernel(std::vector<double> weights);
    std::vector<double> weights_;
    std::vector<double> sigma_;
};

/// Checks positivity and strict decrease (exact comparison, no tolerance)
/// and returns the kernel with cached tail sums.
DiscreteKernel validate_discrete(const std::vector<double>& weights);

/// Samples the profile at i/M (left) or (2i-1)/(2M) (midpoint) of the
/// support. Throws DegenerateTail if a sample lands on a zero of the profile.
DiscreteKernel discretize(const ContinuumKernel& k, int M, Convention convention = Convention::left);

/// K = sum_j rho_j (2j-1), the multiplier relating the nonlocal gradient to
/// the classical one.
double gamma_constant(const DiscreteKernel& k);

/// K = integral of rho(|xi|)|xi| over the line, i.e. 2 * int_0^R rho(r) r dr,
/// by adaptive quadrature to 1e-10 relative tolerance.
double continuum_constant(const ContinuumKernel& k);

}  // namespace nlgrad
