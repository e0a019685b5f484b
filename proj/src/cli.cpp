#include "mimopnc/cli.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

namespace mimopnc {

namespace {

[[noreturn]] void bad(const std::string& msg) {
    throw UsageError(msg);
}

double to_double(const std::string& s, const std::string& flag) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v)) {
            bad(flag + ": invalid number '" + s + "'");
        }
        return v;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        bad(flag + ": invalid number '" + s + "'");
    }
}

std::uint64_t to_u64(const std::string& s, const std::string& flag) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) {
            bad(flag + ": invalid integer '" + s + "'");
        }
        return v;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        bad(flag + ": invalid integer '" + s + "'");
    }
}

std::vector<DetectorId> parse_detector_list(const std::string& s) {
    std::vector<DetectorId> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto id = detector_from_name(item);
        if (!id) {
            bad("--detectors: unknown detector '" + item + "'");
        }
        out.push_back(*id);
    }
    if (out.empty()) {
        bad("--detectors: empty list");
    }
    return out;
}

} // namespace

std::vector<double> parse_snr_range(const std::string& range) {
    const auto p1 = range.find(':');
    const auto p2 = range.find(':', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) {
        bad("--snr: expected A:STEP:B, got '" + range + "'");
    }
    const double a = to_double(range.substr(0, p1), "--snr");
    const double step = to_double(range.substr(p1 + 1, p2 - p1 - 1), "--snr");
    const double b = to_double(range.substr(p2 + 1), "--snr");
    if (step <= 0.0) {
        bad("--snr: step must be positive");
    }
    if (b < a) {
        bad("--snr: end must be >= start");
    }
    std::vector<double> grid;
    for (std::uint64_t i = 0;; ++i) {
        const double v = a + static_cast<double>(i) * step;
        if (v > b + step * 1e-9) {
            break;
        }
        grid.push_back(v);
    }
    return grid;
}

std::string usage_text() {
    return "usage:\n"
           "  mimopnc sweep --snr A:STEP:B --out FILE [--symbols N] [--seed S]\n"
           "                [--detectors a,b,...]\n"
           "  mimopnc gap --in FILE --a DETECTOR --b DETECTOR --at-ber P\n"
           "\n"
           "detectors: vblast-nc vblast-pnc sorted-vblast-nc sorted-vblast-pnc\n"
           "           linear-zf-nc ml-oracle\n"
           "environment: MIMOPNC_THREADS caps the worker count (results unchanged)\n";
}

CliCommand parse_args(const std::vector<std::string>& argv) {
    if (argv.empty()) {
        bad("missing subcommand (sweep | gap)");
    }

    auto take_value = [&](std::size_t& i) -> const std::string& {
        if (i + 1 >= argv.size()) {
            bad(argv[i] + ": missing value");
        }
        return argv[++i];
    };

    CliCommand cmd;
    if (argv[0] == "sweep") {
        cmd.kind = CliCommand::Kind::sweep;
        bool have_snr = false;
        for (std::size_t i = 1; i < argv.size(); ++i) {
            const std::string& f = argv[i];
            if (f == "--snr") {
                cmd.cfg.snr_db_grid = parse_snr_range(take_value(i));
                have_snr = true;
            } else if (f == "--symbols") {
                cmd.cfg.symbols_per_point = to_u64(take_value(i), f);
                if (cmd.cfg.symbols_per_point < 1) {
                    bad("--symbols: must be >= 1");
                }
            } else if (f == "--seed") {
                cmd.cfg.seed = to_u64(take_value(i), f);
            } else if (f == "--detectors") {
                cmd.cfg.detectors = parse_detector_list(take_value(i));
            } else if (f == "--out") {
                cmd.out_path = take_value(i);
            } else {
                bad("sweep: unknown flag '" + f + "'");
            }
        }
        if (!have_snr) {
            bad("sweep: --snr is required");
        }
        if (cmd.out_path.empty()) {
            bad("sweep: --out is required");
        }
        return cmd;
    }

    if (argv[0] == "gap") {
        cmd.kind = CliCommand::Kind::gap;
        bool have_a = false;
        bool have_b = false;
        for (std::size_t i = 1; i < argv.size(); ++i) {
            const std::string& f = argv[i];
            if (f == "--in") {
                cmd.in_path = take_value(i);
            } else if (f == "--a" || f == "--b") {
                const std::string& name = take_value(i);
                const auto id = detector_from_name(name);
                if (!id) {
                    bad(f + ": unknown detector '" + name + "'");
                }
                (f == "--a" ? cmd.det_a : cmd.det_b) = *id;
                (f == "--a" ? have_a : have_b) = true;
            } else if (f == "--at-ber") {
                cmd.target_ber = to_double(take_value(i), f);
                if (!(cmd.target_ber > 0.0 && cmd.target_ber < 1.0)) {
                    bad("--at-ber: must be in (0, 1)");
                }
            } else {
                bad("gap: unknown flag '" + f + "'");
            }
        }
        if (cmd.in_path.empty()) {
            bad("gap: --in is required");
        }
        if (!have_a || !have_b) {
            bad("gap: --a and --b are required");
        }
        return cmd;
    }

    bad("unknown subcommand '" + argv[0] + "'");
}

} // namespace mimopnc
