#pragma once

#include <string>
#include <vector>

#include "mimopnc/harness.hpp"

namespace mimopnc {

struct CliCommand {
    enum class Kind { sweep, gap };

    Kind kind{Kind::sweep};

    // sweep
    SimConfig cfg;
    std::string out_path;

    // gap
    std::string in_path;
    DetectorId det_a{};
    DetectorId det_b{};
    double target_ber{1e-3};
};

/// Parse `sweep`/`gap` subcommand arguments (argv without the program name).
/// Throws UsageError on any invalid flag.
CliCommand parse_args(const std::vector<std::string>& argv);

/// Inclusive arithmetic grid from "A:STEP:B".
std::vector<double> parse_snr_range(const std::string& range);

std::string usage_text();

} // namespace mimopnc
