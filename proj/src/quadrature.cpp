#include "nlgrad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlgrad/errors.hpp"

namespace nlgrad::quad {

GaussRule::GaussRule(int order) {
    nodes.resize(order);
    weights.resize(order);
    const double pi = std::acos(-1.0);
    for (int i = 0; i < order; ++i) {
        // Chebyshev-angle initial guess, then Newton on P_order.
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

double GaussRule::apply(const std::function<double(double)>& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(mid + half * nodes[i]);
    return half * s;
}

const GaussRule& gauss7() {
    static const GaussRule rule(7);
    return rule;
}

const GaussRule& gauss15() {
    static const GaussRule rule(15);
    return rule;
}

namespace {

struct Worker {
    const std::function<double(double)>& f;
    double tol_abs;
    int max_depth;
    double noise_floor;  // below this the 7/15 difference is roundoff chatter
    double worst_err = 0.0;
    long long calls = 0;
    static constexpr long long kMaxCalls = 200000;  // global work budget

    double adapt(double a, double b, double budget, int depth) {
        ++calls;
        const double coarse = gauss7().apply(f, a, b);
        const double fine = gauss15().apply(f, a, b);
        const double err = std::abs(fine - coarse);
        if (err <= std::max(budget, noise_floor) || b - a < 1e-300) return fine;
        if (depth >= max_depth || calls >= kMaxCalls) {
            worst_err = std::max(worst_err, err);
            return fine;
        }
        const double m = 0.5 * (a + b);
        return adapt(a, m, 0.5 * budget, depth + 1) + adapt(m, b, 0.5 * budget, depth + 1);
    }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, const Options& opt) {
    if (!(b > a)) return 0.0;

    std::vector<double> cuts{a, b};
    for (double p : opt.breakpoints)
        if (p > a && p < b) cuts.push_back(p);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Dyadic pre-split of the first segment toward a singular left endpoint.
    std::vector<std::pair<double, double>> segs;
    if (opt.singular_left) {
        double lo = cuts[0], hi = cuts[1];
        double len = hi - lo;
        double floor_len = std::max(opt.dyadic_floor * len, 1e-300);
        std::vector<double> pts;
        for (double h = 0.5 * len; h > floor_len; h *= 0.5) pts.push_back(lo + h);
        pts.push_back(lo);
        std::sort(pts.begin(), pts.end());
        double prev = pts[0];
        for (std::size_t i = 1; i < pts.size(); ++i) {
            segs.emplace_back(prev, pts[i]);
            prev = pts[i];
        }
        segs.emplace_back(prev, hi);
        for (std::size_t i = 2; i < cuts.size(); ++i) segs.emplace_back(cuts[i - 1], cuts[i]);
    } else {
        for (std::size_t i = 1; i < cuts.size(); ++i) segs.emplace_back(cuts[i - 1], cuts[i]);
    }

    // First pass to set the absolute budget from the requested relative tolerance.
    double rough = 0.0;
    for (auto& [lo, hi] : segs) rough += std::abs(gauss15().apply(f, lo, hi));
    double tol = std::max(opt.abs_tol, opt.rel_tol * std::max(rough, 1e-30));

    Worker w{f, tol, opt.max_depth, 1e-15 * std::max(rough, 1e-300)};
    double total = 0.0;
    const double n = static_cast<double>(segs.size());
    for (auto& [lo, hi] : segs) total += w.adapt(lo, hi, tol / n, 0);
    if (w.worst_err > 1e3 * tol)
        throw QuadratureNonConvergent("adaptive quadrature exhausted refinement budget, residual error " +
                                      std::to_string(w.worst_err));
    return total;
}

}  // namespace nlgrad::quad
