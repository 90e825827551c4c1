#include "nlgrad/grad2d.hpp"

#include <algorithm>
#include <cmath>

#include "nlgrad/errors.hpp"

namespace nlgrad {

LatticeFunction2D::LatticeFunction2D(std::vector<double> values, std::int64_t off1,
                                     std::int64_t off2, std::int64_t width, double spacing)
    : values_(std::move(values)), off1_(off1), off2_(off2), width_(width), spacing_(spacing) {
    if (width_ <= 0 || values_.empty() || static_cast<std::int64_t>(values_.size()) % width_ != 0)
        throw Error("2d lattice window dimensions inconsistent with value count");
    if (!(spacing_ > 0.0)) throw Error("2d lattice spacing must be positive");
}

std::int64_t LatticeFunction2D::max_abs_coordinate() const {
    std::int64_t m = 0;
    for (std::int64_t c : {off1_, off1_ + width_ - 1, off2_, off2_ + height() - 1})
        m = std::max<std::int64_t>(m, std::llabs(c));
    return m;
}

DirectionalWeights2D directional_weights(const ContinuumKernel& k, int direction) {
    if (direction != 1 && direction != 2) throw Error("direction must be 1 or 2");
    const double S = k.support_radius();
    const auto reach = static_cast<std::int64_t>(std::ceil(S)) + 1;

    DirectionalWeights2D w;
    w.direction = direction;
    for (std::int64_t i1 = -reach; i1 <= reach; ++i1) {
        for (std::int64_t i2 = -reach; i2 <= reach; ++i2) {
            // shift the half-site offset onto the active axis
            const double a = static_cast<double>(direction == 1 ? i1 : i2) - 0.5;
            const double b = static_cast<double>(direction == 1 ? i2 : i1);
            const double r = std::hypot(a, b);
            if (r > S) continue;
            const double rho = k(r);
            if (rho == 0.0) continue;
            w.entries.push_back({{i1, i2}, rho * a / r});
        }
    }
    return w;
}

M2Coefficients m2_coefficients(const ContinuumKernel& k) {
    const double s5 = std::sqrt(5.0);
    return M2Coefficients{k(0.5), k(1.5), k(0.5 * s5) / s5};
}

DirectionalWeights2D m2_stencil(const ContinuumKernel& k, int direction) {
    if (direction != 1 && direction != 2) throw Error("direction must be 1 or 2");
    const M2Coefficients c = m2_coefficients(k);

    DirectionalWeights2D w;
    w.direction = direction;
    auto put = [&](std::int64_t along, std::int64_t across, double value) {
        if (direction == 1)
            w.entries.push_back({{along, across}, value});
        else
            w.entries.push_back({{across, along}, value});
    };
    put(1, 0, c.rho1);
    put(0, 0, -c.rho1);
    put(2, 0, c.rho2);
    put(-1, 0, -c.rho2);
    for (std::int64_t s : {std::int64_t{1}, std::int64_t{-1}}) {
        put(1, s, c.varrho);
        put(0, s, -c.varrho);
    }
    return w;
}

LatticeFunction2D nonlocal_partial(const LatticeFunction2D& u, const DirectionalWeights2D& w,
                                   double eps) {
    std::int64_t lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0;
    for (const auto& [off, val] : w.entries) {
        lo1 = std::min(lo1, off[0]);
        hi1 = std::max(hi1, off[0]);
        lo2 = std::min(lo2, off[1]);
        hi2 = std::max(hi2, off[1]);
    }
    // v_k can be nonzero only where some u_{k+i} is stored
    const std::int64_t o1 = u.off1() - hi1, o2 = u.off2() - hi2;
    const std::int64_t W = u.width() + (hi1 - lo1), H = u.height() + (hi2 - lo2);

    LatticeFunction2D v(std::vector<double>(static_cast<std::size_t>(W * H), 0.0), o1, o2, W, eps);
    for (std::int64_t k2 = o2; k2 < o2 + H; ++k2) {
        for (std::int64_t k1 = o1; k1 < o1 + W; ++k1) {
            double s = 0.0;
            for (const auto& [off, val] : w.entries) s += val * u.at(k1 + off[0], k2 + off[1]);
            v.ref(k1, k2) = s / eps;
        }
    }
    return v;
}

LatticeFunction2D nonlocal_partial_zform(const LatticeFunction2D& u, const M2Coefficients& c,
                                         int direction, double eps) {
    if (direction != 1 && direction != 2) throw Error("direction must be 1 or 2");
    const std::int64_t e1 = (direction == 1) ? 1 : 0, e2 = 1 - e1;

    // v_k = (1/eps) [ (rho1+rho2) z_k + rho2 (z_{k+e1} + z_{k-e1})
    //                 + varrho (z_{k+e2} + z_{k-e2}) ],  z_k = u_{k+e1} - u_k
    auto z = [&](std::int64_t k1, std::int64_t k2) {
        return u.at(k1 + e1, k2 + e2) - u.at(k1, k2);
    };
    const std::int64_t o1 = u.off1() - 2 * e1 - e2, o2 = u.off2() - 2 * e2 - e1;
    const std::int64_t W = u.width() + 2 * e1 + 1 + 2 * e2, H = u.height() + 2 * e2 + 1 + 2 * e1;

    LatticeFunction2D v(std::vector<double>(static_cast<std::size_t>(W * H), 0.0), o1, o2, W, eps);
    for (std::int64_t k2 = o2; k2 < o2 + H; ++k2) {
        for (std::int64_t k1 = o1; k1 < o1 + W; ++k1) {
            const double s = (c.rho1 + c.rho2) * z(k1, k2) +
                             c.rho2 * (z(k1 + e1, k2 + e2) + z(k1 - e1, k2 - e2)) +
                             c.varrho * (z(k1 + e2, k2 + e1) + z(k1 - e2, k2 - e1));
            v.ref(k1, k2) = s / eps;
        }
    }
    return v;
}

LatticeFunction2D symmetric_partial_demo(const LatticeFunction2D& u, const ContinuumKernel& k,
                                         int direction, double eps) {
    if (direction != 1 && direction != 2) throw Error("direction must be 1 or 2");
    const double S = k.support_radius();
    const auto reach = static_cast<std::int64_t>(std::ceil(S));

    // representatives with positive active component; offsets with zero active
    // component carry zero weight and are dropped
    std::vector<std::pair<std::array<std::int64_t, 2>, double>> reps;
    for (std::int64_t a = 1; a <= reach; ++a) {
        for (std::int64_t b = -reach; b <= reach; ++b) {
            const double r = std::hypot(static_cast<double>(a), static_cast<double>(b));
            if (r > S) continue;
            const double rho = k(r);
            if (rho == 0.0) continue;
            if (direction == 1)
                reps.push_back({{a, b}, rho * static_cast<double>(a) / r});
            else
                reps.push_back({{b, a}, rho * static_cast<double>(a) / r});
        }
    }

    const std::int64_t o1 = u.off1() - reach, o2 = u.off2() - reach;
    const std::int64_t W = u.width() + 2 * reach, H = u.height() + 2 * reach;
    LatticeFunction2D v(std::vector<double>(static_cast<std::size_t>(W * H), 0.0), o1, o2, W, eps);
    for (std::int64_t k2 = o2; k2 < o2 + H; ++k2) {
        for (std::int64_t k1 = o1; k1 < o1 + W; ++k1) {
            double s = 0.0;
            // pairwise so that parity-even data cancels term by term, exactly
            for (const auto& [off, val] : reps)
                s += val * (u.at(k1 + off[0], k2 + off[1]) - u.at(k1 - off[0], k2 - off[1]));
            v.ref(k1, k2) = s / eps;
        }
    }
    return v;
}

SufficientCondition sufficient_condition(double rho1, double rho2, double varrho) {
    SufficientCondition out;
    out.margin = rho1 - rho2 - 2.0 * varrho;
    out.holds = out.margin > 0.0;
    return out;
}

double symbol_phi_2d(double rho1, double rho2, double varrho, int N, double t) {
    if (N < 3) throw Error("symbol_phi_2d needs N >= 3");
    return rho1 + rho2 + 2.0 * rho2 * std::cos(t) +
           2.0 * varrho * std::cos(static_cast<double>(N) * t);
}

double min_symbol_2d(double rho1, double rho2, double varrho, int N) {
    const double two_pi = 2.0 * std::acos(-1.0);
    const auto NN = static_cast<std::int64_t>(N) * N;
    double best = symbol_phi_2d(rho1, rho2, varrho, N, 0.0);
    for (std::int64_t m = 1; m < NN; ++m)
        best = std::min(best,
                        symbol_phi_2d(rho1, rho2, varrho, N, two_pi * static_cast<double>(m) / static_cast<double>(NN)));
    return best;
}

Coercivity2DCertificate coercivity_check_2d(const LatticeFunction2D& u, const ContinuumKernel& k,
                                            double eps) {
    const M2Coefficients c = m2_coefficients(k);
    const SufficientCondition cond = sufficient_condition(c.rho1, c.rho2, c.varrho);
    if (!cond.holds) throw ConditionFails(cond.margin);

    Coercivity2DCertificate cert;
    cert.margin = cond.margin;
    cert.N = static_cast<int>(u.max_abs_coordinate()) + 2;
    cert.N = std::max(cert.N, 3);
    cert.Lambda = min_symbol_2d(c.rho1, c.rho2, c.varrho, cert.N);
    cert.Lambda *= cert.Lambda;

    for (int n : {1, 2}) {
        const LatticeFunction2D v = nonlocal_partial(u, m2_stencil(k, n), eps);
        for (std::int64_t k2 = v.off2(); k2 < v.off2() + v.height(); ++k2)
            for (std::int64_t k1 = v.off1(); k1 < v.off1() + v.width(); ++k1) {
                const double g = v.at(k1, k2);
                cert.F_eps += eps * eps * g * g;
            }
    }

    // nearest-neighbour pairs, each unordered pair counted once
    double D = 0.0;
    for (std::int64_t k2 = u.off2() - 1; k2 < u.off2() + u.height(); ++k2)
        for (std::int64_t k1 = u.off1() - 1; k1 < u.off1() + u.width(); ++k1) {
            const double d1 = u.at(k1 + 1, k2) - u.at(k1, k2);
            const double d2 = u.at(k1, k2 + 1) - u.at(k1, k2);
            D += d1 * d1 + d2 * d2;
        }
    cert.dirichlet = D;

    const double rhs = cert.Lambda * cert.dirichlet;
    cert.ratio = rhs > 0.0 ? cert.F_eps / rhs : 1.0;
    cert.pass = cert.F_eps >= rhs - 1e-10 * (1.0 + cert.F_eps);
    return cert;
}

}  // namespace nlgrad
