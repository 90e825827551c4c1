#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlgrad/config.hpp"
#include "nlgrad/errors.hpp"
#include "nlgrad/runner.hpp"

namespace {

constexpr const char* kSubcommands[] = {"symbol",         "coercivity", "gamma-converge",
                                        "counterexample", "avg-identity", "grad2d-check",
                                        "oscillation"};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nlgrad experiment runner: kernel spectra, coercivity certificates and sweeps"};
    app.require_subcommand(1);

    std::string selected;
    std::string config_path;
    std::vector<std::string> overrides;  // key=value pairs
    std::vector<std::string> eps_values;

    for (const char* name : kSubcommands) {
        CLI::App* sub = app.add_subcommand(name, "");
        sub->add_option("-c,--config", config_path, "config file (key = value lines)");
        sub->add_option("-s,--set", overrides, "override or add 'key=value'");
        sub->add_option("--eps", eps_values, "epsilon value(s), appended as a sweep");
        sub->add_option("--kernel", [&overrides](const std::vector<std::string>& v) {
            overrides.push_back("kernel=" + v.back());
            return true;
        }, "kernel kind: tent | riesz | step | weights");
        sub->add_option("--weights", [&overrides](const std::vector<std::string>& v) {
            overrides.push_back("weights=" + v.back());
            return true;
        }, "comma-separated stencil weights");
        sub->add_option("--seed", [&overrides](const std::vector<std::string>& v) {
            overrides.push_back("seed=" + v.back());
            return true;
        }, "RNG seed (required for randomized trials)");
        sub->add_option("--trials", [&overrides](const std::vector<std::string>& v) {
            overrides.push_back("trials=" + v.back());
            return true;
        }, "number of random trials");
        sub->add_option("-o,--out", [&overrides](const std::vector<std::string>& v) {
            overrides.push_back("out=" + v.back());
            return true;
        }, "CSV output path (default: stdout)");
        sub->callback([&selected, name] { selected = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        nlgrad::Config cfg =
            config_path.empty() ? nlgrad::Config{} : nlgrad::Config::from_file(config_path);
        for (const std::string& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw nlgrad::ConfigError("override '" + kv + "' is not of the form key=value");
            cfg.override_key(kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (!eps_values.empty()) {
            cfg.override_key("eps", eps_values.front());  // flag sweep replaces the file's
            for (std::size_t i = 1; i < eps_values.size(); ++i) cfg.set("eps", eps_values[i]);
        }
        return nlgrad::run_subcommand(selected, cfg, std::cout);
    } catch (const nlgrad::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
