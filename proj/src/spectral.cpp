#include "nlgrad/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "nlgrad/errors.hpp"

namespace nlgrad {

namespace {
const double kPi = std::acos(-1.0);
}

CirculantSpec::CirculantSpec(std::vector<double> band, int dim) : sigma(std::move(band)), N(dim) {
    if (sigma.empty()) throw Error("circulant needs at least the diagonal band");
    if (sigma.back() == 0.0 && sigma.size() > 1) throw Error("outermost band sigma_n must be nonzero");
    if (N <= 2 * n()) throw TooSmallN(N, n());
}

CirculantSpec circulant_from_kernel(const DiscreteKernel& k, int N) {
    return CirculantSpec(k.tail_sums(), N);
}

double symbol_phi(const CirculantSpec& spec, double t) {
    double v = spec.sigma[0];
    for (int j = 1; j <= spec.n(); ++j) v += 2.0 * spec.sigma[static_cast<std::size_t>(j)] * std::cos(j * t);
    return v;
}

double fejer_kernel(int j, double t) {
    // (1 - cos(jt)) / (1 - cos t) = (sin(jt/2) / sin(t/2))^2; the sine form
    // avoids the 1 - cos cancellation at small t. The cosine-sum closed form
    // sum_{|k|<j} (j-|k|) cos(kt) covers the removable singularity itself.
    const double s = std::sin(0.5 * t);
    if (std::abs(s) < 1e-8) {
        double v = static_cast<double>(j);
        for (int k = 1; k < j; ++k) v += 2.0 * (j - k) * std::cos(k * t);
        return v;
    }
    const double q = std::sin(0.5 * static_cast<double>(j) * t) / s;
    return q * q;
}

std::vector<double> fejer_decomposition(const CirculantSpec& spec) {
    const int n = spec.n();
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n + 1));
    for (int j = 1; j <= n + 1; ++j) {
        double c = spec.band(j - 1) - 2.0 * spec.band(j) + spec.band(j + 1);
        if (!(c > 0.0)) throw ConvexityViolated(static_cast<std::size_t>(j));
        coeffs.push_back(c);
    }
    return coeffs;
}

double fejer_reconstruct(const std::vector<double>& coeffs, double t) {
    double v = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        v += coeffs[j] * fejer_kernel(static_cast<int>(j) + 1, t);
    return v;
}

double min_symbol(const CirculantSpec& spec, int grid_points) {
    grid_points = std::max(grid_points, 1024);
    double best_t = 0.0, best = symbol_phi(spec, 0.0);
    for (int i = 1; i <= grid_points; ++i) {
        const double t = kPi * i / grid_points;
        const double v = symbol_phi(spec, t);
        if (v < best) {
            best = v;
            best_t = t;
        }
    }
    // golden-section descent on the bracketing grid cells
    const double h = kPi / grid_points;
    double a = std::max(0.0, best_t - h), b = std::min(kPi, best_t + h);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = symbol_phi(spec, c), fd = symbol_phi(spec, d);
    while (b - a > 1e-12) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = symbol_phi(spec, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = symbol_phi(spec, d);
        }
    }
    return std::min(best, std::min(fc, fd));
}

std::vector<double> circulant_eigenvalues(const CirculantSpec& spec) {
    std::vector<double> eig(static_cast<std::size_t>(spec.N));
    for (int k = 0; k < spec.N; ++k)
        eig[static_cast<std::size_t>(k)] = symbol_phi(spec, 2.0 * kPi * k / spec.N);
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> dense_eig_oracle(const CirculantSpec& spec) {
    const int N = spec.N;
    if (N > 64) throw TooLargeN(N);

    std::vector<double> A(static_cast<std::size_t>(N) * N, 0.0);
    auto at = [&A, N](int i, int j) -> double& { return A[static_cast<std::size_t>(i) * N + j]; };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int d = std::abs(i - j);
            d = std::min(d, N - d);  // circulant wrap
            at(i, j) = spec.band(d);
        }

    double norm = 0.0;
    for (double v : A) norm += v * v;
    norm = std::sqrt(norm);
    const double tol = 1e-12 * std::max(1.0, norm);

    // cyclic Jacobi rotation sweeps
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off += 2.0 * at(p, q) * at(p, q);
        if (std::sqrt(off) <= tol) break;

        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int r = 0; r < N; ++r) {
                    const double arp = at(r, p), arq = at(r, q);
                    at(r, p) = c * arp - s * arq;
                    at(r, q) = s * arp + c * arq;
                }
                for (int r = 0; r < N; ++r) {
                    const double apr = at(p, r), aqr = at(q, r);
                    at(p, r) = c * apr - s * aqr;
                    at(q, r) = s * apr + c * aqr;
                }
            }
    }

    std::vector<double> eig(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

SymbolAnalysis coercivity_constant(const DiscreteKernel& k, int N) {
    const CirculantSpec spec = circulant_from_kernel(k, N);
    SymbolAnalysis out;
    out.fejer_coeffs = fejer_decomposition(spec);
    out.min_phi_bound = spec.band(0) - 2.0 * spec.band(1) + spec.band(2);
    out.lambda_min = circulant_eigenvalues(spec).front();
    out.coercivity_Lambda = out.lambda_min * out.lambda_min;
    out.n_independent_Lambda = out.min_phi_bound * out.min_phi_bound;
    return out;
}

}  // namespace nlgrad
