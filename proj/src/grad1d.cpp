#include "nlgrad/grad1d.hpp"

#include <vector>

#include "nlgrad/errors.hpp"

namespace nlgrad {

namespace {

std::vector<double> tail_sums(std::span<const double> weights) {
    std::vector<double> sigma(weights.size());
    double acc = 0.0;
    for (std::size_t j = weights.size(); j-- > 0;) {
        sigma[j] = acc + weights[j];
        acc = sigma[j];
    }
    return sigma;
}

LatticeFunction1D gradient_impl(const LatticeFunction1D& u, std::span<const double> weights,
                                const std::vector<double>& sigma, StencilForm form) {
    const auto M = static_cast<std::int64_t>(weights.size());
    const std::int64_t lo = u.offset() - M;
    const std::int64_t hi = u.end() - 1 + (M - 1);  // inclusive
    const double inv_eps = 1.0 / u.spacing();

    std::vector<double> out(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (std::int64_t k = lo; k <= hi; ++k) {
        double v = 0.0;
        if (form == StencilForm::direct) {
            double left = 0.0, right = 0.0;
            for (std::int64_t i = 1; i <= M; ++i) {
                left += weights[static_cast<std::size_t>(i - 1)] * u.at(k + 1 - i);
                right += weights[static_cast<std::size_t>(i - 1)] * u.at(k + i);
            }
            v = right - left;
        } else {
            // combination of nearest-neighbour differences, tail-sum coefficients
            for (std::int64_t m = -M + 2; m <= M; ++m) {
                const std::int64_t j = (m >= 1) ? m - 1 : 1 - m;
                v += sigma[static_cast<std::size_t>(j)] * (u.at(k + m) - u.at(k + m - 1));
            }
        }
        out[static_cast<std::size_t>(k - lo)] = inv_eps * v;
    }
    return LatticeFunction1D(std::move(out), lo, u.spacing());
}

}  // namespace

LatticeFunction1D nonlocal_gradient(const LatticeFunction1D& u, const DiscreteKernel& k,
                                    StencilForm form) {
    return gradient_impl(u, k.weights(), k.tail_sums(), form);
}

LatticeFunction1D nonlocal_gradient_raw(const LatticeFunction1D& u, std::span<const double> weights,
                                        StencilForm form) {
    return gradient_impl(u, weights, tail_sums(weights), form);
}

LatticeFunction1D nonlocal_gradient_symmetric(const LatticeFunction1D& u,
                                              std::span<const double> weights) {
    const auto M = static_cast<std::int64_t>(weights.size());
    const std::int64_t lo = u.offset() - M;
    const std::int64_t hi = u.end() - 1 + M;
    const double inv_eps = 1.0 / u.spacing();
    std::vector<double> out(static_cast<std::size_t>(hi - lo + 1), 0.0);
    for (std::int64_t k = lo; k <= hi; ++k) {
        double v = 0.0;
        for (std::int64_t i = 1; i <= M; ++i)
            v += weights[static_cast<std::size_t>(i - 1)] * (u.at(k + i) - u.at(k - i));
        out[static_cast<std::size_t>(k - lo)] = inv_eps * v;
    }
    return LatticeFunction1D(std::move(out), lo, u.spacing());
}

LatticeFunction1D nonlocal_gradient_symmetric(const LatticeFunction1D& u, const DiscreteKernel& k) {
    return nonlocal_gradient_symmetric(u, std::span<const double>(k.weights()));
}

LatticeFunction1D oscillation_null_vector(int M, std::int64_t first, std::int64_t last,
                                          double spacing) {
    if (M % 2 != 0) throw OddM(M);
    std::vector<double> vals(static_cast<std::size_t>(last - first));
    for (std::int64_t k = first; k < last; ++k)
        vals[static_cast<std::size_t>(k - first)] = (k % 2 == 0) ? 1.0 : -1.0;
    return LatticeFunction1D(std::move(vals), first, spacing);
}

std::pair<double, double> summation_by_parts(const LatticeFunction1D& u, const LatticeFunction1D& phi,
                                             const DiscreteKernel& k) {
    if (u.spacing() != phi.spacing()) throw SpacingMismatch(u.spacing(), phi.spacing());
    const double eps = u.spacing();

    const LatticeFunction1D du = nonlocal_gradient(u, k, StencilForm::direct);
    double lhs = 0.0;
    for (std::int64_t j = du.offset(); j < du.end(); ++j) lhs += eps * du.at(j) * phi.at(j);

    const LatticeFunction1D dphi = nonlocal_gradient(phi, k, StencilForm::direct);
    double rhs = 0.0;
    for (std::int64_t j = u.offset(); j < u.end(); ++j) rhs -= eps * u.at(j) * dphi.at(j - 1);

    return {lhs, rhs};
}

}  // namespace nlgrad
