#include "nlgrad/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "nlgrad/errors.hpp"
#include "nlgrad/quadrature.hpp"

namespace nlgrad {

ContinuumKernel ContinuumKernel::tent(double support) {
    if (!(support > 0.0)) throw Error("tent kernel needs positive support");
    auto profile = [support](double r) { return std::max(support - r, 0.0); };
    return ContinuumKernel(KernelKind::tent, profile, support, {support});
}

ContinuumKernel ContinuumKernel::truncated_riesz(double alpha, double support) {
    if (!(alpha > 0.0)) throw Error("riesz kernel needs alpha > 0");
    if (!(support > 0.0)) throw Error("riesz kernel needs positive support");
    auto profile = [alpha, support](double r) {
        if (r > support) return 0.0;
        return std::pow(r, -1.0 - alpha);
    };
    return ContinuumKernel(KernelKind::truncated_riesz, profile, support, {support}, alpha);
}

ContinuumKernel ContinuumKernel::tabulated(std::vector<double> radii, std::vector<double> values) {
    if (radii.size() != values.size() || radii.size() < 2)
        throw Error("tabulated kernel needs at least two (radius, value) samples");
    for (std::size_t i = 1; i < radii.size(); ++i) {
        if (!(radii[i] > radii[i - 1])) throw Error("tabulated radii must be strictly increasing");
        if (values[i] > values[i - 1]) throw Error("tabulated kernel must be nonincreasing");
    }
    for (double v : values)
        if (v < 0.0) throw Error("tabulated kernel values must be nonnegative");
    double support = radii.back();
    auto profile = [radii, values](double r) {
        if (r <= radii.front()) return values.front();
        if (r >= radii.back()) return r > radii.back() ? 0.0 : values.back();
        auto it = std::upper_bound(radii.begin(), radii.end(), r);
        std::size_t i = static_cast<std::size_t>(it - radii.begin());
        double t = (r - radii[i - 1]) / (radii[i] - radii[i - 1]);
        return values[i - 1] + t * (values[i] - values[i - 1]);
    };
    return ContinuumKernel(KernelKind::tabulated, profile, support, radii);
}

ContinuumKernel ContinuumKernel::step(std::vector<double> weights, double support) {
    if (weights.empty()) throw Error("step kernel needs at least one weight");
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (!(weights[i] > 0.0)) throw NonPositiveWeight(i);
    const int M = static_cast<int>(weights.size());
    std::vector<double> cuts;
    for (int i = 1; i <= M; ++i) cuts.push_back(support * i / M);
    auto profile = [weights, support, M](double r) {
        if (r > support) return 0.0;
        // cell ((i-1)/M, i/M] * support; r = 0 takes the first value
        int i = static_cast<int>(std::ceil(r * M / support));
        i = std::clamp(i, 1, M);
        return weights[static_cast<std::size_t>(i - 1)];
    };
    return ContinuumKernel(KernelKind::step, profile, support, cuts);
}

DiscreteKernel::DiscreteKernel(std::vector<double> weights) : weights_(std::move(weights)) {
    const std::size_t M = weights_.size();
    // sigma_j = rho_{j+1} + ... + rho_M (so sigma_0 sums all weights)
    sigma_.assign(M, 0.0);
    double acc = 0.0;
    for (std::size_t j = M; j-- > 0;) {
        sigma_[j] = acc + weights_[j];
        acc = sigma_[j];
    }
}

DiscreteKernel validate_discrete(const std::vector<double>& weights) {
    if (weights.empty()) throw Error("empty weight array");
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (!(weights[i] > 0.0)) throw NonPositiveWeight(i);
    for (std::size_t i = 0; i + 1 < weights.size(); ++i)
        if (!(weights[i] > weights[i + 1])) throw NotStrictlyDecreasing(i);
    return DiscreteKernel(weights);
}

DiscreteKernel discretize(const ContinuumKernel& k, int M, Convention convention) {
    if (M < 1) throw Error("discretize needs M >= 1");
    std::vector<double> w(static_cast<std::size_t>(M));
    for (int i = 1; i <= M; ++i) {
        double frac = (convention == Convention::left) ? static_cast<double>(i) / M
                                                       : (2.0 * i - 1.0) / (2.0 * M);
        double v = k(frac * k.support_radius());
        if (!(v > 0.0))
            throw DegenerateTail("profile vanishes at sample " + std::to_string(i) + "/" +
                                 std::to_string(M) + "; shrink M or use the midpoint convention");
        w[static_cast<std::size_t>(i - 1)] = v;
    }
    return validate_discrete(w);
}

double gamma_constant(const DiscreteKernel& k) {
    double sum = 0.0;
    for (int j = 1; j <= k.M(); ++j) sum += k.weight(j) * (2.0 * j - 1.0);
    return sum;
}

double continuum_constant(const ContinuumKernel& k) {
    if (k.kind() == KernelKind::truncated_riesz && k.alpha() >= 1.0)
        throw NonIntegrable("riesz profile with alpha >= 1 is not integrable against |xi|");
    quad::Options opt;
    opt.rel_tol = 1e-10;
    opt.breakpoints = k.breakpoints();
    opt.singular_left = k.singular_at_zero();
    double radial = quad::integrate([&k](double r) { return k(r) * r; }, 0.0, k.support_radius(), opt);
    return 2.0 * radial;
}

}  // namespace nlgrad
