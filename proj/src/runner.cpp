#include "nlgrad/runner.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <random>
#include <sstream>

#include "nlgrad/continuum.hpp"
#include "nlgrad/energy.hpp"
#include "nlgrad/errors.hpp"
#include "nlgrad/grad1d.hpp"
#include "nlgrad/grad2d.hpp"
#include "nlgrad/kernel.hpp"
#include "nlgrad/spectral.hpp"

namespace nlgrad {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

ContinuumKernel continuum_kernel_from(const Config& cfg) {
    const std::string kind = cfg.get_string("kernel", "tent");
    const double support = cfg.get_double("support", kind == "riesz" ? 1.0 : 1.0);
    if (kind == "tent") return ContinuumKernel::tent(cfg.get_double("support", 1.0));
    if (kind == "riesz")
        return ContinuumKernel::truncated_riesz(cfg.require_double("alpha"), support);
    if (kind == "step") return ContinuumKernel::step(cfg.get_vector("weights"), support);
    throw ConfigError("unknown continuum kernel '" + kind + "'");
}

DiscreteKernel discrete_kernel_from(const Config& cfg) {
    if (cfg.has("weights") && cfg.get_string("kernel", "weights") == "weights")
        return validate_discrete(cfg.get_vector("weights"));
    const auto M = static_cast<int>(cfg.get_int("M", 2));
    const std::string conv = cfg.get_string("convention", "midpoint");
    if (conv != "left" && conv != "midpoint")
        throw ConfigError("convention must be 'left' or 'midpoint'");
    return discretize(continuum_kernel_from(cfg), M,
                      conv == "left" ? Convention::left : Convention::midpoint);
}

/// CSV sink: file when `out` is configured, otherwise the report stream.
struct Sink {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os;

    static Sink open(const Config& cfg, std::ostream& fallback) {
        Sink s;
        if (cfg.has("out")) {
            s.file = std::make_unique<std::ofstream>(cfg.require_string("out"));
            if (!*s.file) throw ConfigError("cannot open output '" + cfg.require_string("out") + "'");
            s.os = s.file.get();
        } else {
            s.os = &fallback;
        }
        return s;
    }
    std::ostream& stream() { return *os; }
};

void write_header(std::ostream& os, const std::string& sub, const Config& cfg) {
    os << "# nlgrad " << sub << "\n";
    for (const auto& line : cfg.resolved_lines()) os << "# " << line << "\n";
}

std::uint64_t require_seed(const Config& cfg) {
    if (!cfg.has("seed")) throw ConfigError("randomized trials need an explicit 'seed'");
    return static_cast<std::uint64_t>(cfg.require_int("seed"));
}

LatticeFunction1D random_field_1d(std::mt19937_64& rng, std::int64_t sites, double eps) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> vals(static_cast<std::size_t>(sites));
    for (auto& v : vals) v = dist(rng);
    return LatticeFunction1D(std::move(vals), -sites / 2, eps);
}

SampledField smooth_bump() {
    return SampledField{[](double x) { return std::exp(1.0 / (x * x - 1.0)); }, 1.0};
}

int run_symbol(const Config& cfg, std::ostream& os) {
    const DiscreteKernel k = discrete_kernel_from(cfg);
    const auto N = static_cast<int>(cfg.get_int("N", 64));
    const CirculantSpec spec = circulant_from_kernel(k, N);
    const SymbolAnalysis sa = coercivity_constant(k, N);

    Sink sink = Sink::open(cfg, os);
    write_header(sink.stream(), "symbol", cfg);
    sink.stream() << "k,angle,eigenvalue\n";
    const double two_pi = 2.0 * std::acos(-1.0);
    for (int j = 0; j < N; ++j) {
        const double t = two_pi * j / N;
        sink.stream() << j << "," << format_double(t) << "," << format_double(symbol_phi(spec, t))
                      << "\n";
    }
    os << "subcommand=symbol min_phi=" << format_double(min_symbol(spec))
       << " lambda_min=" << format_double(sa.lambda_min)
       << " Lambda=" << format_double(sa.coercivity_Lambda)
       << " bound=" << format_double(sa.min_phi_bound)
       << " Lambda_bound=" << format_double(sa.n_independent_Lambda) << " status=ok\n";
    return 0;
}

int run_coercivity(const Config& cfg, std::ostream& os) {
    const DiscreteKernel k = discrete_kernel_from(cfg);
    const double eps = cfg.get_double("eps", 1.0 / 512.0);
    const auto trials = cfg.get_int("trials", 1000);
    const auto sites = cfg.get_int("sites", 128);
    std::mt19937_64 rng(require_seed(cfg));

    Sink sink = Sink::open(cfg, os);
    write_header(sink.stream(), "coercivity", cfg);
    sink.stream() << "trial,F_eps,dirichlet,Lambda,ratio,pass\n";

    long long failures = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double Lambda = 0.0;
    for (long long t = 0; t < trials; ++t) {
        const LatticeFunction1D u = random_field_1d(rng, sites, eps);
        const CoercivityCertificate cert = coercivity_check(u, k);
        Lambda = cert.Lambda;
        min_ratio = std::min(min_ratio, cert.ratio);
        failures += cert.pass ? 0 : 1;
        sink.stream() << t << "," << format_double(cert.F_eps) << ","
                      << format_double(cert.dirichlet) << "," << format_double(cert.Lambda) << ","
                      << format_double(cert.ratio) << "," << (cert.pass ? 1 : 0) << "\n";
    }
    os << "subcommand=coercivity trials=" << trials << " Lambda=" << format_double(Lambda)
       << " min_ratio=" << format_double(min_ratio) << " failures=" << failures
       << " status=" << (failures == 0 ? "ok" : "violated") << "\n";
    return failures == 0 ? 0 : 1;
}

int run_gamma(const Config& cfg, std::ostream& os) {
    const DiscreteKernel k = discrete_kernel_from(cfg);
    std::vector<double> eps_list = cfg.get_double_list("eps");
    if (eps_list.empty())
        for (int p = 4; p <= 12; ++p) eps_list.push_back(std::ldexp(1.0, -p));

    const SmoothFunction u{[](double x) { return (1.0 - x * x) * (1.0 - x * x); },
                           [](double x) { return -4.0 * x * (1.0 - x * x); }, -1.0, 1.0};
    const EnergyDensity f = EnergyDensity::quadratic();
    const double target = gamma_target(u, k, f);

    Sink sink = Sink::open(cfg, os);
    write_header(sink.stream(), "gamma-converge", cfg);
    sink.stream() << "eps,F_eps,target,rel_err\n";

    std::vector<double> errs;
    double last_rel = 0.0;
    for (double eps : eps_list) {
        const auto half = static_cast<std::int64_t>(std::ceil(1.0 / eps));
        std::vector<double> vals(static_cast<std::size_t>(2 * half + 1), 0.0);
        for (std::int64_t j = -half; j <= half; ++j) {
            const double x = eps * static_cast<double>(j);
            if (x > -1.0 && x < 1.0) vals[static_cast<std::size_t>(j + half)] = u.value(x);
        }
        const LatticeFunction1D us(std::move(vals), -half, eps);
        const double F = general_energy(us, k, f);
        last_rel = std::abs(F - target) / std::abs(target);
        errs.push_back(std::abs(F - target));
        sink.stream() << format_double(eps) << "," << format_double(F) << ","
                      << format_double(target) << "," << format_double(last_rel) << "\n";
    }
    const double slope = eps_list.size() > 1 ? loglog_slope(eps_list, errs) : 0.0;
    os << "subcommand=gamma-converge target=" << format_double(target)
       << " final_rel_err=" << format_double(last_rel) << " order=" << format_double(slope)
       << " status=ok\n";
    return 0;
}

int run_counterexample(const Config& cfg, std::ostream& os) {
    const double alpha = cfg.get_double("alpha", 0.5);
    const double R = cfg.get_double("R", 2.0);
    std::vector<double> eps_list = cfg.get_double_list("eps");
    if (eps_list.empty())
        for (int p = 2; p <= 8; ++p) eps_list.push_back(std::ldexp(1.0, -p));

    Sink sink = Sink::open(cfg, os);
    write_header(sink.stream(), "counterexample", cfg);
    sink.stream() << "eps,energy,bound,dirichlet,bounded\n";

    std::vector<double> energies, dirichlets;
    long long violations = 0;
    for (double eps : eps_list) {
        const RieszCounterexample r = riesz_counterexample(alpha, R, eps);
        const bool ok = r.energy <= r.bound;
        violations += ok ? 0 : 1;
        energies.push_back(r.energy);
        dirichlets.push_back(r.dirichlet);
        sink.stream() << format_double(eps) << "," << format_double(r.energy) << ","
                      << format_double(r.bound) << "," << format_double(r.dirichlet) << ","
                      << (ok ? 1 : 0) << "\n";
    }
    const double e_slope = eps_list.size() > 1 ? loglog_slope(eps_list, energies) : 0.0;
    const double d_slope = eps_list.size() > 1 ? loglog_slope(eps_list, dirichlets) : 0.0;
    os << "subcommand=counterexample energy_slope=" << format_double(e_slope)
       << " dirichlet_slope=" << format_double(d_slope) << " violations=" << violations
       << " status=" << (violations == 0 ? "ok" : "violated") << "\n";
    return violations == 0 ? 0 : 1;
}

int run_avg_identity(const Config& cfg, std::ostream& os) {
    const ContinuumKernel base = continuum_kernel_from(cfg);
    std::vector<double> M_list = cfg.get_double_list("M");
    if (M_list.empty()) M_list = {2.0, 4.0, 8.0};
    std::vector<double> eps_list = cfg.get_double_list("eps");
    if (eps_list.empty()) eps_list = {1.0 / 8.0, 1.0 / 16.0};
    const std::string conv = cfg.get_string("convention", "midpoint");
    const SampledField u = smooth_bump();

    Sink sink = Sink::open(cfg, os);
    write_header(sink.stream(), "avg-identity", cfg);
    sink.stream() << "M,eps,discrepancy,lattice_energy,dirichlet,constant,ratio,pass\n";

    double worst = 0.0;
    long long failures = 0;
    for (double Md : M_list) {
        const auto M = static_cast<int>(Md);
        const DiscreteKernel rhoM =
            discretize(base, M, conv == "left" ? Convention::left : Convention::midpoint);
        for (double eps : eps_list) {
            const double disc = discrete_continuum_identity(u, rhoM, eps);
            const EquicoercivityCertificate cert = equicoercivity_check(u, rhoM, eps);
            worst = std::max(worst, disc);
            failures += cert.pass ? 0 : 1;
            sink.stream() << M << "," << format_double(eps) << "," << format_double(disc) << ","
                          << format_double(cert.lattice_energy) << ","
                          << format_double(cert.dirichlet) << "," << format_double(cert.constant)
                          << "," << format_double(cert.ratio) << "," << (cert.pass ? 1 : 0)
                          << "\n";
        }
    }
    os << "subcommand=avg-identity max_discrepancy=" << format_double(worst)
       << " failures=" << failures << " status=" << (failures == 0 ? "ok" : "violated") << "\n";
    return failures == 0 ? 0 : 1;
}

int run_grad2d(const Config& cfg, std::ostream& os) {
    const ContinuumKernel k =
        cfg.has("kernel") || cfg.has("support") ? continuum_kernel_from(cfg)
                                                : ContinuumKernel::tent(2.0);
    const double eps = cfg.get_double("eps", 1.0 / 64.0);
    const auto window = cfg.get_int("window", 24);
    const auto trials = cfg.get_int("trials", 200);
    std::mt19937_64 rng(require_seed(cfg));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    const M2Coefficients c = m2_coefficients(k);
    const SufficientCondition cond = sufficient_condition(c.rho1, c.rho2, c.varrho);

    Sink sink = Sink::open(cfg, os);
    write_header(sink.stream(), "grad2d-check", cfg);
    sink.stream() << "trial,F_eps,dirichlet,ratio,pass\n";

    auto checkerboard = [&]() {
        std::vector<double> vals(static_cast<std::size_t>(window * window));
        for (std::int64_t j = 0; j < window; ++j)
            for (std::int64_t i = 0; i < window; ++i)
                vals[static_cast<std::size_t>(j * window + i)] = ((i + j) % 2 == 0) ? 1.0 : -1.0;
        return LatticeFunction2D(std::move(vals), -window / 2, -window / 2, window, eps);
    };

    long long failures = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double Lambda = 0.0;
    for (long long t = 0; t <= trials; ++t) {
        LatticeFunction2D u = [&] {
            if (t == 0) return checkerboard();  // the adversarial case, always included
            std::vector<double> vals(static_cast<std::size_t>(window * window));
            for (auto& v : vals) v = dist(rng);
            return LatticeFunction2D(std::move(vals), -window / 2, -window / 2, window, eps);
        }();
        const Coercivity2DCertificate cert = coercivity_check_2d(u, k, eps);
        Lambda = cert.Lambda;
        min_ratio = std::min(min_ratio, cert.ratio);
        failures += cert.pass ? 0 : 1;
        sink.stream() << t << "," << format_double(cert.F_eps) << ","
                      << format_double(cert.dirichlet) << "," << format_double(cert.ratio) << ","
                      << (cert.pass ? 1 : 0) << "\n";
    }
    os << "subcommand=grad2d-check margin=" << format_double(cond.margin)
       << " Lambda=" << format_double(Lambda) << " min_ratio=" << format_double(min_ratio)
       << " failures=" << failures << " status=" << (failures == 0 ? "ok" : "violated") << "\n";
    return failures == 0 ? 0 : 1;
}

int run_oscillation(const Config& cfg, std::ostream& os) {
    const auto M = static_cast<int>(cfg.get_int("M", 2));
    const auto first = cfg.get_int("first", 0);
    const auto last = cfg.get_int("last", 32);
    const LatticeFunction1D u = oscillation_null_vector(M, first, last);

    const std::vector<double> constant(static_cast<std::size_t>(M), 1.0);
    const LatticeFunction1D sym = nonlocal_gradient_symmetric(u, constant);

    std::vector<double> strict(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) strict[static_cast<std::size_t>(i)] = static_cast<double>(M - i);
    const DiscreteKernel dec = validate_discrete(strict);
    const LatticeFunction1D asym = nonlocal_gradient(u, dec);

    Sink sink = Sink::open(cfg, os);
    write_header(sink.stream(), "oscillation", cfg);
    sink.stream() << "k,u,symmetric,asymmetric\n";
    for (std::int64_t k = sym.offset(); k < sym.end(); ++k)
        sink.stream() << k << "," << format_double(u.at(k)) << "," << format_double(sym.at(k))
                      << "," << format_double(asym.at(k)) << "\n";

    // interior = at least M sites away from both window ends
    double sym_interior = 0.0, asym_lo = std::numeric_limits<double>::infinity(), asym_hi = 0.0;
    for (std::int64_t k = first + M; k < last - M; ++k) {
        sym_interior = std::max(sym_interior, std::abs(sym.at(k)));
        asym_lo = std::min(asym_lo, std::abs(asym.at(k)));
        asym_hi = std::max(asym_hi, std::abs(asym.at(k)));
    }
    const bool ok = sym_interior == 0.0 && asym_lo > 0.0;
    os << "subcommand=oscillation sym_interior_max=" << format_double(sym_interior)
       << " asym_interior_min=" << format_double(asym_lo)
       << " asym_interior_max=" << format_double(asym_hi)
       << " status=" << (ok ? "ok" : "violated") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_subcommand(const std::string& name, const Config& cfg, std::ostream& os) {
    if (name == "symbol") return run_symbol(cfg, os);
    if (name == "coercivity") return run_coercivity(cfg, os);
    if (name == "gamma-converge") return run_gamma(cfg, os);
    if (name == "counterexample") return run_counterexample(cfg, os);
    if (name == "avg-identity") return run_avg_identity(cfg, os);
    if (name == "grad2d-check") return run_grad2d(cfg, os);
    if (name == "oscillation") return run_oscillation(cfg, os);
    throw ConfigError("unknown subcommand '" + name + "'");
}

}  // namespace nlgrad
