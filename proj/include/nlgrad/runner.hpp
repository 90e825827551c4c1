#pragma once

#include <ostream>
#include <string>

#include "nlgrad/config.hpp"

namespace nlgrad {

/// Executes one experiment subcommand against a resolved configuration,
/// writing the CSV artifact (to the `out` path or to `os`) and the summary
/// key=value line to `os`. Returns 0 when every certified inequality holds
/// and 1 otherwise; configuration problems are reported by throwing.
int run_subcommand(const std::string& name, const Config& cfg, std::ostream& os);

/// The %.17g rendering used for every floating-point value in artifacts,
/// chosen so that reruns are byte-identical and values round-trip.
std::string format_double(double v);

}  // namespace nlgrad
