#include "nlgrad/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nlgrad/energy.hpp"
#include "nlgrad/errors.hpp"
#include "nlgrad/grad1d.hpp"
#include "nlgrad/quadrature.hpp"
#include "nlgrad/spectral.hpp"

namespace nlgrad {

namespace {
const double kPi = std::acos(-1.0);

double cutoff(double R, double t) { return std::min(1.0, std::max(R - std::abs(t), 0.0)); }
double cutoff_slope(double R, double t) {
    const double a = std::abs(t);
    if (a <= R - 1.0 || a >= R) return 0.0;
    return t > 0.0 ? -1.0 : 1.0;
}
}  // namespace

double continuum_gradient(const SampledField& u, const ContinuumKernel& k, double eps, double x,
                          double abs_tol) {
    const double S = k.support_radius();
    // xi = eps * s turns (1/eps) rho(xi/eps) d xi into rho(s) ds.
    auto integrand = [&](double s) { return k(s) * (u(x + eps * s) - u(x - eps * s)); };

    quad::Options opt;
    opt.abs_tol = abs_tol;
    opt.rel_tol = 0.0;
    opt.breakpoints = k.breakpoints();
    // kinks where the shifted arguments cross the support edge of u
    for (double edge : {u.R, -u.R}) {
        for (double s : {(edge - x) / eps, (x - edge) / eps})
            if (s > 0.0 && s < S) opt.breakpoints.push_back(s);
    }
    opt.singular_left = k.singular_at_zero();
    return quad::integrate(integrand, 0.0, S, opt);
}

SampledField riesz_oscillating_field(double R, double eps) {
    const double e2 = eps * eps;
    return SampledField{[R, e2](double t) { return e2 * std::sin(t / e2) * cutoff(R, t); }, R};
}

namespace {

/// Shared quadrature nodes for the oscillatory Riesz integrals: weights
/// already folded with xi^(-1-alpha) cos(omega xi) and ... sin(omega xi).
struct RieszNodes {
    std::vector<double> xi;
    std::vector<double> wcos;
    std::vector<double> wsin;
};

RieszNodes build_riesz_nodes(double alpha, double omega, double eps, double xi_max) {
    RieszNodes out;
    const double period = 2.0 * kPi / omega;
    const double head_end = std::min(period, xi_max);
    const double xi_min = 1e-12 * eps;

    auto push_segment = [&](double a, double b, const quad::GaussRule& rule) {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double s = mid + half * rule.nodes[i];
            const double w = half * rule.weights[i] * std::pow(s, -1.0 - alpha);
            out.xi.push_back(s);
            out.wcos.push_back(w * std::cos(omega * s));
            out.wsin.push_back(w * std::sin(omega * s));
        }
    };

    // dyadic head toward the integrable singularity at 0
    std::vector<double> cuts{head_end};
    for (double h = 0.5 * head_end; h > xi_min; h *= 0.5) cuts.push_back(h);
    cuts.push_back(std::min(xi_min, cuts.back()));
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 1; i < cuts.size(); ++i) push_segment(cuts[i - 1], cuts[i], quad::gauss15());

    // half-period chunks through the oscillatory body
    double a = head_end;
    while (a < xi_max) {
        const double b = std::min(a + 0.5 * period, xi_max);
        push_segment(a, b, quad::gauss7());
        a = b;
    }
    return out;
}

}  // namespace

RieszCounterexample riesz_counterexample(double alpha, double R, double eps) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error("riesz counterexample needs alpha in (0,1)");
    if (!(R > 1.0)) throw Error("riesz counterexample needs R > 1");

    RieszCounterexample out;
    const double c_alpha = 4.0 / (1.0 - alpha) + 2.0 / alpha;
    out.bound = 4.0 * R * c_alpha * c_alpha * std::pow(eps, 1.0 - alpha);

    const double omega = 1.0 / (eps * eps);
    const RieszNodes nodes = build_riesz_nodes(alpha, omega, eps, 2.0 * R);

    // grad(y) = eps^(2+alpha) [ sin(omega y) A(y) + cos(omega y) B(y) ] with
    //   A(y) = int xi^(-1-a) cos(omega xi) (phi(y+xi) - phi(y-xi)) dxi
    //   B(y) = int xi^(-1-a) sin(omega xi) (phi(y+xi) + phi(y-xi)) dxi,
    // both slowly varying in y. Per slow cell the fast phase is integrated in
    // closed form against the midpoint envelope.
    auto envelopes = [&](double y, double& A, double& B) {
        const double reach = R + std::abs(y);
        A = 0.0;
        B = 0.0;
        for (std::size_t i = 0; i < nodes.xi.size(); ++i) {
            const double xi = nodes.xi[i];
            if (xi > reach) continue;  // node order is per-segment, not globally sorted
            const double fp = cutoff(R, y + xi);
            const double fm = cutoff(R, y - xi);
            A += nodes.wcos[i] * (fp - fm);
            B += nodes.wsin[i] * (fp + fm);
        }
    };

    // slow y-grid over (-R, R), split at the cutoff kinks and refined near them
    std::vector<double> kinks{-R, -(R - 1.0), R - 1.0, R};
    std::vector<double> grid;
    const int base_cells = 384;
    for (int i = 0; i <= base_cells; ++i) grid.push_back(-R + 2.0 * R * i / base_cells);
    for (double q : kinks)
        for (int i = 1; i <= 16; ++i)
            for (double s : {-1.0, 1.0}) {
                const double y = q + s * 0.05 * i / 16.0;
                if (y > -R && y < R) grid.push_back(y);
            }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    double energy = 0.0;
    for (std::size_t c = 0; c + 1 < grid.size(); ++c) {
        const double y0 = grid[c], y1 = grid[c + 1];
        double A, B;
        envelopes(0.5 * (y0 + y1), A, B);
        const double d = y1 - y0;
        const double s2 = (std::sin(2.0 * omega * y1) - std::sin(2.0 * omega * y0)) / (4.0 * omega);
        const double c2 = (std::cos(2.0 * omega * y1) - std::cos(2.0 * omega * y0)) / (4.0 * omega);
        energy += A * A * (0.5 * d - s2) + B * B * (0.5 * d + s2) + 2.0 * A * B * (-c2);
    }
    out.energy = std::pow(eps, 2.0 * (2.0 + alpha)) * energy;

    // Dirichlet energy of u_eps on (-R, R): composite Gauss per half period.
    auto du = [&](double t) {
        return std::cos(t * omega) * cutoff(R, t) + eps * eps * std::sin(t * omega) * cutoff_slope(R, t);
    };
    const double half_period = kPi / omega;
    double dirichlet = 0.0;
    double a = -R;
    while (a < R) {
        double b = std::min(a + half_period, R);
        for (double q : kinks)
            if (q > a && q < b) b = std::min(b, q);
        dirichlet += quad::gauss7().apply([&](double t) { const double v = du(t); return v * v; }, a, b);
        a = b;
    }
    out.dirichlet = dirichlet;
    return out;
}

AveragePipeline cell_averages(const SampledField& u, double eps, int M) {
    if (M < 1) throw Error("cell_averages needs M >= 1");
    const double h = eps / M;
    const auto j_min = static_cast<std::int64_t>(std::floor(-u.R / h)) + 1;
    const auto j_max = static_cast<std::int64_t>(std::ceil(u.R / h));

    std::vector<double> means(static_cast<std::size_t>(j_max - j_min + 1), 0.0);
    quad::Options opt;
    opt.rel_tol = 0.0;
    opt.abs_tol = 1e-13 * h;  // per-cell absolute budget, means accurate to ~1e-13
    for (std::int64_t j = j_min; j <= j_max; ++j) {
        const double lo = (static_cast<double>(j) - 1.0) * h;
        const double hi = static_cast<double>(j) * h;
        means[static_cast<std::size_t>(j - j_min)] =
            quad::integrate([&u](double t) { return u(t); }, lo, hi, opt) / h;
    }
    LatticeFunction1D averages(std::move(means), j_min, h);

    std::vector<double> quot(static_cast<std::size_t>(j_max - j_min + 2), 0.0);
    for (std::int64_t j = j_min; j <= j_max + 1; ++j)
        quot[static_cast<std::size_t>(j - j_min)] = (averages.at(j) - averages.at(j - 1)) / h;
    LatticeFunction1D quotients(std::move(quot), j_min, h);

    return AveragePipeline{eps, M, std::move(averages), std::move(quotients)};
}

double discrete_continuum_identity(const SampledField& u, const DiscreteKernel& rhoM, double eps,
                                   double quad_tol) {
    const int M = rhoM.M();
    const double h = eps / M;
    const ContinuumKernel step = ContinuumKernel::step(rhoM.weights());

    const AveragePipeline pipe = cell_averages(u, eps, M);
    const LatticeFunction1D disc = nonlocal_gradient(pipe.averages, rhoM);
    const double bridge = eps / (M * M);  // lattice-vs-continuum normalization

    double worst = 0.0;
    for (std::int64_t k = disc.offset(); k < disc.end(); ++k) {
        const double x = h * static_cast<double>(k);
        const double cont = continuum_gradient(u, step, eps, x, quad_tol);
        worst = std::max(worst, std::abs(cont - bridge * disc.at(k)));
    }
    return worst;
}

EquicoercivityCertificate equicoercivity_check(const SampledField& u, const DiscreteKernel& rhoM,
                                               double eps) {
    const int M = rhoM.M();
    const AveragePipeline pipe = cell_averages(u, eps, M);
    const LatticeFunction1D v = nonlocal_gradient(pipe.averages, rhoM);
    const double h = eps / M;
    const double M2 = static_cast<double>(M) * M;

    EquicoercivityCertificate cert;
    for (std::int64_t k = v.offset(); k < v.end(); ++k) {
        const double g = v.at(k) / M2;  // (1/eps) * continuum gradient at eps k / M
        cert.lattice_energy += h * g * g;
    }
    cert.dirichlet = dirichlet_energy(pipe.averages);

    const auto extent = std::max(std::llabs(pipe.averages.offset()), std::llabs(pipe.averages.end() - 1));
    const int N = static_cast<int>(2 * extent) + 2 * M + 1;
    cert.lambda_min = coercivity_constant(rhoM, N).lambda_min;
    cert.constant = (cert.lambda_min / M2) * (cert.lambda_min / M2);
    const double rhs = cert.constant * cert.dirichlet;
    cert.ratio = rhs > 0.0 ? cert.lattice_energy / rhs : 1.0;
    cert.pass = cert.lattice_energy >= rhs - 1e-10 * (1.0 + cert.lattice_energy);
    return cert;
}

}  // namespace nlgrad
