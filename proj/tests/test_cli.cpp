#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nlgrad/config.hpp"
#include "nlgrad/errors.hpp"
#include "nlgrad/runner.hpp"

using namespace nlgrad;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::filesystem::path temp_csv(const char* tag) {
    return std::filesystem::temp_directory_path() / (std::string("nlgrad_test_") + tag + ".csv");
}

}  // namespace

TEST_CASE("numeric token shorthands") {
    CHECK(parse_number("0.5") == 0.5);
    CHECK(parse_number("1/512") == doctest::Approx(1.0 / 512.0).epsilon(1e-16));
    CHECK(parse_number("2^-8") == doctest::Approx(1.0 / 256.0).epsilon(1e-16));
    CHECK(parse_number(" 3 / 4 ") == doctest::Approx(0.75));
    CHECK_THROWS_AS(parse_number("abc"), ConfigError);
    CHECK_THROWS_AS(parse_number("1.0x"), ConfigError);
    CHECK_THROWS_AS(parse_number("1/0"), ConfigError);
    CHECK_THROWS_AS(parse_number(""), ConfigError);
}

TEST_CASE("config parsing: comments, repeats, overrides") {
    const Config cfg = Config::from_string(
        "# a comment\n"
        "kernel = weights\n"
        "weights = 2,1\n"
        "eps = 1/4   # trailing comment\n"
        "eps = 1/8\n"
        "seed = 42\n");
    CHECK(cfg.get_string("kernel", "") == "weights");
    CHECK(cfg.require_int("seed") == 42);
    const auto eps = cfg.get_double_list("eps");
    REQUIRE(eps.size() == 2);
    CHECK(eps[0] == 0.25);
    CHECK(eps[1] == 0.125);
    CHECK(cfg.get_vector("weights") == std::vector<double>{2.0, 1.0});
    CHECK(cfg.get_double("missing", 7.0) == 7.0);
    CHECK_THROWS_AS(cfg.require_string("missing"), ConfigError);

    Config over = cfg;
    over.override_key("eps", "1/16");
    CHECK(over.get_double_list("eps") == std::vector<double>{1.0 / 16.0});
}

TEST_CASE("config parsing: diagnostics carry the line") {
    try {
        Config::from_string("kernel = tent\nnonsense line\n", "test.cfg");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("test.cfg:2") != std::string::npos);
    }
}

TEST_CASE("format_double is stable and round-trips") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(std::stod(format_double(6400.0 / 105.0)) == 6400.0 / 105.0);
}

TEST_CASE("symbol subcommand summary") {
    Config cfg;
    cfg.set("weights", "1");
    cfg.set("N", "8");
    cfg.set("out", temp_csv("sym").string());
    std::ostringstream os;
    CHECK(run_subcommand("symbol", cfg, os) == 0);
    CHECK(os.str().find("min_phi=1 ") != std::string::npos);
    CHECK(os.str().find("Lambda=1 ") != std::string::npos);
}

TEST_CASE("misconfigurations are loud") {
    std::ostringstream os;
    Config bad;
    bad.set("weights", "1,2");  // increasing: inadmissible
    CHECK_THROWS_AS(run_subcommand("symbol", bad, os), NotStrictlyDecreasing);

    Config noseed;
    noseed.set("weights", "2,1");
    CHECK_THROWS_AS(run_subcommand("coercivity", noseed, os), ConfigError);

    Config fine;
    CHECK_THROWS_AS(run_subcommand("no-such-subcommand", fine, os), ConfigError);

    Config bigeps;
    bigeps.set("weights", "2,1");
    bigeps.set("seed", "1");
    bigeps.set("eps", "0.5");  // >= 1/(2M)
    bigeps.set("trials", "1");
    CHECK_THROWS_AS(run_subcommand("coercivity", bigeps, os), EpsilonTooLarge);
}

TEST_CASE("coercivity run: all trials certified, reruns byte-identical") {
    const auto p1 = temp_csv("coer1");
    const auto p2 = temp_csv("coer2");
    for (const auto& p : {p1, p2}) {
        Config cfg;
        cfg.set("weights", "2,1");
        cfg.set("eps", "1/512");
        cfg.set("trials", "50");
        cfg.set("seed", "42");
        cfg.override_key("out", p.string());
        std::ostringstream os;
        CHECK(run_subcommand("coercivity", cfg, os) == 0);
        CHECK(os.str().find("failures=0") != std::string::npos);
    }
    const std::string a = slurp(p1), b = slurp(p2);
    CHECK(!a.empty());
    // identical modulo the differing 'out' header line
    auto strip_out = [](std::string s) {
        std::istringstream in(s);
        std::ostringstream os;
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("# out", 0) != 0) os << line << "\n";
        return os.str();
    };
    CHECK(strip_out(a) == strip_out(b));
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("gamma-converge run reports the fitted order") {
    Config cfg;
    cfg.set("weights", "2,1");
    cfg.set("eps", "2^-4");
    cfg.set("eps", "2^-6");
    cfg.set("out", temp_csv("gamma").string());
    std::ostringstream os;
    CHECK(run_subcommand("gamma-converge", cfg, os) == 0);
    CHECK(os.str().find("target=60.952380952380963") != std::string::npos);
    std::filesystem::remove(temp_csv("gamma"));
}

TEST_CASE("oscillation run certifies both stencils") {
    Config cfg;
    cfg.set("out", temp_csv("osc").string());
    std::ostringstream os;
    CHECK(run_subcommand("oscillation", cfg, os) == 0);
    CHECK(os.str().find("sym_interior_max=0 ") != std::string::npos);
    CHECK(os.str().find("asym_interior_min=2 ") != std::string::npos);
    std::filesystem::remove(temp_csv("osc"));
}

TEST_CASE("csv artifacts carry the resolved config header") {
    const auto p = temp_csv("hdr");
    Config cfg;
    cfg.set("weights", "2,1");
    cfg.set("N", "8");
    cfg.set("out", p.string());
    std::ostringstream os;
    run_subcommand("symbol", cfg, os);
    const std::string body = slurp(p);
    CHECK(body.rfind("# nlgrad symbol\n", 0) == 0);
    CHECK(body.find("# N = 8\n") != std::string::npos);
    CHECK(body.find("# weights = 2,1\n") != std::string::npos);
    CHECK(body.find("k,angle,eigenvalue\n") != std::string::npos);
    std::filesystem::remove(p);
}
