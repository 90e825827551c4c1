#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nlgrad/kernel.hpp"

namespace nlgrad {

/// Real values on eps*Z^2 over a rectangular window, implicit zero outside.
class LatticeFunction2D {
public:
    LatticeFunction2D(std::vector<double> values, std::int64_t off1, std::int64_t off2,
                      std::int64_t width, double spacing);

    double spacing() const { return spacing_; }
    std::int64_t off1() const { return off1_; }
    std::int64_t off2() const { return off2_; }
    std::int64_t width() const { return width_; }
    std::int64_t height() const { return static_cast<std::int64_t>(values_.size()) / width_; }

    double at(std::int64_t k1, std::int64_t k2) const {
        const std::int64_t i = k1 - off1_, j = k2 - off2_;
        if (i < 0 || i >= width_ || j < 0 || j >= height()) return 0.0;
        return values_[static_cast<std::size_t>(j * width_ + i)];
    }
    double& ref(std::int64_t k1, std::int64_t k2) {
        return values_[static_cast<std::size_t>((k2 - off2_) * width_ + (k1 - off1_))];
    }
    /// Largest |coordinate| carried by the window (both axes).
    std::int64_t max_abs_coordinate() const;

private:
    std::vector<double> values_;
    std::int64_t off1_, off2_, width_;
    double spacing_;
};

/// Signed stencil weights of one discrete nonlocal partial derivative:
/// offset -> weight, nonnegative for i_n > 0 and nonpositive for i_n <= 0.
struct DirectionalWeights2D {
    int direction = 1;  // 1 or 2
    std::vector<std::pair<std::array<std::int64_t, 2>, double>> entries;
};

/// Weights rho(|i - e_n/2|) (i_n - 1/2) / |i - e_n/2| over every offset the
/// kernel support reaches (the general-d formula at d = 2).
DirectionalWeights2D directional_weights(const ContinuumKernel& k, int direction);

/// The ten-point M = 2 stencil built from rho1 = rho(1/2), rho2 = rho(3/2)
/// and varrho = rho(sqrt(5)/2)/sqrt(5); this is the operator the band/symbol
/// analysis and the coercivity certificate are stated for.
struct M2Coefficients {
    double rho1, rho2, varrho;
};
M2Coefficients m2_coefficients(const ContinuumKernel& k);
DirectionalWeights2D m2_stencil(const ContinuumKernel& k, int direction);

/// The fully symmetric variant rho(|i|) i_n / |i| (no half-site shift),
/// summed over +/- offset pairs so that checkerboard data cancels exactly.
/// Kept only to demonstrate its oscillation blind spot.
LatticeFunction2D symmetric_partial_demo(const LatticeFunction2D& u, const ContinuumKernel& k,
                                         int direction, double eps);

/// v_k = (1/eps) sum_i w_i u_{k+i}.
LatticeFunction2D nonlocal_partial(const LatticeFunction2D& u, const DirectionalWeights2D& w,
                                   double eps);

/// Same derivative through the z-form (differences z_k = u_{k+e1} - u_k);
/// must agree with the raw M = 2 stencil.
LatticeFunction2D nonlocal_partial_zform(const LatticeFunction2D& u, const M2Coefficients& c,
                                         int direction, double eps);

struct SufficientCondition {
    bool holds = false;
    double margin = 0.0;  // rho1 - rho2 - 2*varrho
};
SufficientCondition sufficient_condition(double rho1, double rho2, double varrho);

/// Phi^N(t) = rho1 + rho2 + 2 rho2 cos(t) + 2 varrho cos(N t).
double symbol_phi_2d(double rho1, double rho2, double varrho, int N, double t);

/// Minimum of Phi^N over the N^2 circulant angles 2 pi m / N^2.
double min_symbol_2d(double rho1, double rho2, double varrho, int N);

struct Coercivity2DCertificate {
    double F_eps = 0.0;       // sum eps^2 (|d1 u|^2 + |d2 u|^2)
    double dirichlet = 0.0;   // unordered nearest-neighbour pairs
    double margin = 0.0;
    double Lambda = 0.0;      // (min Phi^N over circulant angles)^2
    int N = 0;
    double ratio = 0.0;
    bool pass = false;
};

/// Certificate-style 2D check for the M = 2 stencil of kernel k. Throws
/// ConditionFails when rho1 <= rho2 + 2 varrho.
Coercivity2DCertificate coercivity_check_2d(const LatticeFunction2D& u, const ContinuumKernel& k,
                                            double eps);

}  // namespace nlgrad
