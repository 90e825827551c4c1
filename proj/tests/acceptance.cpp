// Acceptance gate: one pass/fail line per criterion. Run with no arguments
// for the full gate or with a criterion number to run just that one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nlgrad/config.hpp"
#include "nlgrad/continuum.hpp"
#include "nlgrad/energy.hpp"
#include "nlgrad/grad1d.hpp"
#include "nlgrad/grad2d.hpp"
#include "nlgrad/kernel.hpp"
#include "nlgrad/quadrature.hpp"
#include "nlgrad/runner.hpp"
#include "nlgrad/spectral.hpp"

using namespace nlgrad;

namespace {

struct Result {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }
    // success summary; on failure the first cause stays in front
    void summary(const std::string& s) { detail = pass ? s : detail + " | " + s; }
};

const std::vector<std::vector<double>> kKernels{{2.0, 1.0}, {3.0, 2.0, 1.0}, {4.0, 3.0, 2.0, 1.0}};

Result criterion1() {
    Result r;
    for (const auto& w : kKernels) {
        const DiscreteKernel k = validate_discrete(w);
        for (int N : {8, 16, 32, 64}) {
            const CirculantSpec spec = circulant_from_kernel(k, N);
            const auto fast = circulant_eigenvalues(spec);
            const auto dense = dense_eig_oracle(spec);
            for (std::size_t i = 0; i < fast.size(); ++i)
                r.require(std::abs(fast[i] - dense[i]) < 1e-10,
                          "symbol/Jacobi mismatch at N=" + std::to_string(N));
        }
    }
    r.summary("symbol eigenvalues match the dense Jacobi oracle elementwise (1e-10)");
    return r;
}

Result criterion2() {
    Result r;
    std::mt19937_64 rng(20260824);
    std::uniform_real_distribution<double> dist(1e-12, std::acos(-1.0) - 1e-12);
    for (const auto& w : kKernels) {
        const DiscreteKernel k = validate_discrete(w);
        const CirculantSpec spec = circulant_from_kernel(k, 64);
        const auto coeffs = fejer_decomposition(spec);
        for (double c : coeffs) r.require(c > 0.0, "nonpositive coefficient");
        for (int rep = 0; rep < 1000; ++rep) {
            const double t = dist(rng);
            r.require(std::abs(fejer_reconstruct(coeffs, t) - symbol_phi(spec, t)) < 1e-12,
                      "reconstruction off at t=" + std::to_string(t));
        }
    }
    r.summary("positive second-difference coefficients rebuild the symbol (1e-12, 1000 t each)");
    return r;
}

Result criterion3() {
    Result r;
    const DiscreteKernel k = validate_discrete({2.0, 1.0});
    const double bound = k.sigma(0) - 2.0 * k.sigma(1) + k.sigma(2);
    r.require(bound == 1.0, "analytic bound is not 1");
    for (int N = 4; N <= 64; ++N) {
        const double lmin = circulant_eigenvalues(circulant_from_kernel(k, N)).front();
        if (N % 2 == 0)
            r.require(std::abs(lmin - 1.0) <= 1e-12, "even N=" + std::to_string(N) + " lmin != 1");
        else
            r.require(lmin >= 1.0 - 1e-12, "odd N=" + std::to_string(N) + " below 1");
        r.require(lmin >= bound - 1e-12, "analytic bound violated at N=" + std::to_string(N));
    }
    r.summary("minimal eigenvalue pinned at 1 across N=4..64, analytic bound never violated");
    return r;
}

Result criterion4() {
    Result r;
    const DiscreteKernel k = validate_discrete({2.0, 1.0});
    const double eps = 1.0 / 512.0;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> vals(128);
        for (auto& v : vals) v = dist(rng);
        const LatticeFunction1D u(std::move(vals), -64, eps);
        const CoercivityCertificate cert = coercivity_check(u, k);
        r.require(std::abs(cert.Lambda - 1.0) < 1e-12, "Lambda drifted from 1");
        r.require(cert.F_eps >= 1.0 * cert.dirichlet - 1e-10 * (1.0 + cert.F_eps),
                  "coercivity violated at trial " + std::to_string(trial));
    }
    r.summary("1000 seeded trials on 128 sites: F >= Dirichlet with Lambda = 1 at eps=1/512");
    return r;
}

Result criterion5() {
    Result r;
    const DiscreteKernel k = validate_discrete({2.0, 1.0});
    const EnergyDensity f = EnergyDensity::quadratic();
    const SmoothFunction uf{[](double x) { return (1.0 - x * x) * (1.0 - x * x); },
                            [](double x) { return -4.0 * x * (1.0 - x * x); }, -1.0, 1.0};

    // the target from independent quadrature, checked against the closed form
    const double target = gamma_target(uf, k, f);
    r.require(std::abs(target - 6400.0 / 105.0) < 1e-8 * target, "quadrature target != 6400/105");

    std::vector<double> eps_list, errs;
    double rel_at_2_10 = 1.0;
    for (int p = 4; p <= 12; ++p) {
        const double eps = std::ldexp(1.0, -p);
        const auto half = static_cast<std::int64_t>(std::ceil(1.0 / eps));
        std::vector<double> vals(static_cast<std::size_t>(2 * half + 1), 0.0);
        for (std::int64_t j = -half; j <= half; ++j) {
            const double x = eps * static_cast<double>(j);
            if (x > -1.0 && x < 1.0) vals[static_cast<std::size_t>(j + half)] = uf.value(x);
        }
        const double F = general_energy(LatticeFunction1D(std::move(vals), -half, eps), k, f);
        eps_list.push_back(eps);
        errs.push_back(std::abs(F - target));
        if (p == 10) rel_at_2_10 = std::abs(F - target) / target;
    }
    r.require(rel_at_2_10 <= 0.02, "relative error at eps=2^-10 above 2%");
    const double order = loglog_slope(eps_list, errs);
    r.require(order >= 0.9, "convergence order " + format_double(order) + " below 0.9");
    r.summary("energies converge to 6400/105 (rel err " + format_double(rel_at_2_10) +
               " at eps=2^-10, order " + format_double(order) + ")");
    return r;
}

Result criterion6() {
    Result r;
    const LatticeFunction1D u = oscillation_null_vector(2, 0, 64);
    const std::vector<double> constant{1.0, 1.0};
    const LatticeFunction1D sym = nonlocal_gradient_symmetric(u, constant);
    for (std::int64_t j = 2; j < 62; ++j)
        r.require(sym.at(j) == 0.0, "symmetric stencil not bitwise zero at k=" + std::to_string(j));

    const LatticeFunction1D asym = nonlocal_gradient(u, validate_discrete({2.0, 1.0}));
    for (std::int64_t j = 2; j < 62; ++j)
        r.require(std::abs(asym.at(j)) == 2.0, "asymmetric magnitude != 2 at k=" + std::to_string(j));

    r.summary("symmetric constant-weight stencil is bitwise zero; kernel [2,1] sees magnitude 2");
    return r;
}

Result criterion7() {
    Result r;
    const SampledField u{[](double x) { return std::exp(1.0 / (x * x - 1.0)); }, 1.0};
    const ContinuumKernel tent = ContinuumKernel::tent(1.0);
    double worst = 0.0;
    for (int M : {2, 4, 8}) {
        const DiscreteKernel rhoM = discretize(tent, M, Convention::midpoint);
        for (double eps : {1.0 / 8.0, 1.0 / 16.0}) {
            const double disc = discrete_continuum_identity(u, rhoM, eps);
            worst = std::max(worst, disc);
            r.require(disc <= 1e-7, "discrepancy " + format_double(disc) + " at M=" +
                                        std::to_string(M) + ", eps=" + format_double(eps));
        }
    }
    r.summary("cell-average gradients match continuum quadrature (max discrepancy " +
               format_double(worst) + ")");
    return r;
}

Result criterion8() {
    Result r;
    const double alpha = 0.5, R = 2.0;
    std::vector<double> eps_list, energies, dirichlets;
    for (int p = 2; p <= 8; ++p) {
        const double eps = std::ldexp(1.0, -p);
        const RieszCounterexample c = riesz_counterexample(alpha, R, eps);
        r.require(c.energy <= c.bound, "bound violated at eps=2^-" + std::to_string(p));
        eps_list.push_back(eps);
        energies.push_back(c.energy);
        dirichlets.push_back(c.dirichlet);
    }
    const double e_slope = loglog_slope(eps_list, energies);
    const double d_slope = loglog_slope(eps_list, dirichlets);
    r.require(e_slope >= 0.4, "energy slope " + format_double(e_slope) + " below 0.4");
    r.require(std::abs(d_slope - (-2.0)) <= 0.2,
              "Dirichlet slope " + format_double(d_slope) + " not in -2 +/- 0.2");
    r.summary("energy <= 4Rc^2 eps^(1-a) at every eps; energy slope " + format_double(e_slope) +
               ", Dirichlet slope " + format_double(d_slope));
    return r;
}

Result criterion9() {
    Result r;
    const ContinuumKernel tent = ContinuumKernel::tent(2.0);
    const M2Coefficients c = m2_coefficients(tent);
    r.require(std::abs(c.rho1 - 1.5) < 1e-12, "rho1 != 1.5");
    r.require(std::abs(c.rho2 - 0.5) < 1e-12, "rho2 != 0.5");
    r.require(std::abs(c.varrho - 0.394427) < 1e-6, "varrho != 0.394427");
    const SufficientCondition cond = sufficient_condition(c.rho1, c.rho2, c.varrho);
    r.require(cond.holds && std::abs(cond.margin - 0.211146) < 1e-6, "margin != 0.211146");

    const double eps = 1.0 / 64.0;
    std::mt19937_64 rng(9001);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial <= 200; ++trial) {
        std::vector<double> vals(24 * 24);
        if (trial == 0) {  // the adversarial checkerboard, always included
            for (std::int64_t j = 0; j < 24; ++j)
                for (std::int64_t i = 0; i < 24; ++i)
                    vals[static_cast<std::size_t>(j * 24 + i)] = ((i + j) % 2 == 0) ? 1.0 : -1.0;
        } else {
            for (auto& v : vals) v = dist(rng);
        }
        const LatticeFunction2D u(std::move(vals), -12, -12, 24, eps);
        const Coercivity2DCertificate cert = coercivity_check_2d(u, tent, eps);
        r.require(cert.pass, "2d coercivity violated at trial " + std::to_string(trial));
    }
    r.summary("margin 0.211146 > 0; 200 random 24x24 trials plus the checkerboard all certified");
    return r;
}

Result criterion10() {
    Result r;
    namespace fs = std::filesystem;
    const fs::path out = fs::temp_directory_path() / "nlgrad_acceptance_determinism.csv";
    auto run_once = [&](const char* sub, std::vector<std::pair<const char*, const char*>> kv) {
        Config cfg;
        for (auto& [k, v] : kv) cfg.set(k, v);
        cfg.set("out", out.string().c_str());
        std::ostringstream sink;
        run_subcommand(sub, cfg, sink);
        std::ifstream in(out, std::ios::binary);
        std::ostringstream bytes;
        bytes << in.rdbuf();
        return bytes.str() + "|" + sink.str();
    };

    const std::vector<std::pair<const char*, const char*>> coer{
        {"weights", "2,1"}, {"eps", "1/512"}, {"trials", "100"}, {"seed", "7"}};
    r.require(run_once("coercivity", coer) == run_once("coercivity", coer),
              "coercivity rerun differs");

    const std::vector<std::pair<const char*, const char*>> g2{
        {"trials", "25"}, {"seed", "11"}, {"eps", "1/64"}};
    r.require(run_once("grad2d-check", g2) == run_once("grad2d-check", g2),
              "grad2d-check rerun differs");

    const std::vector<std::pair<const char*, const char*>> ce{{"alpha", "0.5"}, {"R", "2"},
                                                              {"eps", "1/4"},   {"eps", "1/16"}};
    r.require(run_once("counterexample", ce) == run_once("counterexample", ce),
              "counterexample rerun differs");

    fs::remove(out);
    r.summary("seeded reruns of coercivity, grad2d-check and counterexample are byte-identical");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    using Fn = Result (*)();
    const std::vector<std::pair<const char*, Fn>> criteria{
        {"eigenvalue oracle equivalence", criterion1},
        {"Fejer reconstruction", criterion2},
        {"N-independent minimal eigenvalue", criterion3},
        {"1d coercivity certificate", criterion4},
        {"limit energy pointwise value", criterion5},
        {"oscillation counterexamples", criterion6},
        {"discrete-continuum identity", criterion7},
        {"Riesz counterexample sweep", criterion8},
        {"2d sufficient condition and coercivity", criterion9},
        {"deterministic artifacts", criterion10},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int num = static_cast<int>(i) + 1;
        if (only != 0 && num != only) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d [%s]: %s — %s (%.2fs)\n", num, criteria[i].first,
                    r.pass ? "PASS" : "FAIL", r.detail.c_str(), secs);
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
