#include "nlgrad/energy.hpp"

#include <cmath>

#include "nlgrad/errors.hpp"
#include "nlgrad/quadrature.hpp"

namespace nlgrad {

double dirichlet_energy(const LatticeFunction1D& u) {
    const double eps = u.spacing();
    double s = 0.0;
    for (std::int64_t k = u.offset() - 1; k < u.end(); ++k) {
        const double q = (u.at(k + 1) - u.at(k)) / eps;
        s += eps * q * q;
    }
    return s;
}

double quadratic_energy(const LatticeFunction1D& u, const DiscreteKernel& k) {
    const LatticeFunction1D v = nonlocal_gradient(u, k);
    const double eps = u.spacing();
    double s = 0.0;
    for (std::int64_t j = v.offset(); j < v.end(); ++j) s += eps * v.at(j) * v.at(j);
    return s;
}

double general_energy(const LatticeFunction1D& u, const DiscreteKernel& k, const EnergyDensity& f) {
    const LatticeFunction1D v = nonlocal_gradient(u, k);
    const double eps = u.spacing();
    double s = 0.0;
    for (std::int64_t j = v.offset(); j < v.end(); ++j) s += eps * f.f(v.at(j));
    return s;
}

CoercivityCertificate coercivity_check(const LatticeFunction1D& u, const DiscreteKernel& k) {
    const double eps = u.spacing();
    const double limit = 1.0 / (2.0 * k.M());
    if (!(eps < limit)) throw EpsilonTooLarge(eps, limit);

    const int N = static_cast<int>(std::ceil(1.0 / eps)) + 4 * k.M();
    const SymbolAnalysis sa = coercivity_constant(k, N);

    CoercivityCertificate cert;
    cert.F_eps = quadratic_energy(u, k);
    cert.dirichlet = dirichlet_energy(u);
    cert.Lambda = sa.coercivity_Lambda;
    cert.Lambda_bound = sa.n_independent_Lambda;
    cert.lambda_times_dirichlet = cert.Lambda * cert.dirichlet;
    cert.ratio = cert.lambda_times_dirichlet > 0.0 ? cert.F_eps / cert.lambda_times_dirichlet
                                                   : (cert.F_eps >= 0.0 ? 1.0 : 0.0);
    cert.pass = cert.F_eps >= cert.lambda_times_dirichlet - 1e-10 * (1.0 + cert.F_eps);
    return cert;
}

double gamma_target(const SmoothFunction& u, const DiscreteKernel& k, const EnergyDensity& f) {
    const double K = gamma_constant(k);
    quad::Options opt;
    opt.rel_tol = 1e-10;
    return quad::integrate([&](double t) { return f.f(K * u.derivative(t)); }, u.a, u.b, opt);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace nlgrad
