#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mimopnc/cli.hpp"
#include "mimopnc/csv_io.hpp"

namespace {

unsigned threads_from_env() {
    const char* env = std::getenv("MIMOPNC_THREADS");
    if (env == nullptr || *env == '\0') {
        return 0; // auto
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1) {
        throw mimopnc::UsageError("MIMOPNC_THREADS must be a positive integer");
    }
    return static_cast<unsigned>(v);
}

int run(const std::vector<std::string>& args) {
    using mimopnc::CliCommand;

    CliCommand cmd = mimopnc::parse_args(args);
    if (cmd.kind == CliCommand::Kind::sweep) {
        cmd.cfg.max_workers = threads_from_env();
        const auto records = mimopnc::run_sweep(cmd.cfg);
        mimopnc::write_csv(records, cmd.out_path);
        std::fprintf(stderr, "wrote %zu records to %s\n", records.size(), cmd.out_path.c_str());
        return 0;
    }

    const auto records = mimopnc::read_csv(cmd.in_path);
    const double gap = mimopnc::estimate_gap_db(records, cmd.det_a, cmd.det_b, cmd.target_ber);
    std::printf("%.4f\n", gap);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && (args[0] == "-h" || args[0] == "--help")) {
        std::fputs(mimopnc::usage_text().c_str(), stdout);
        return 0;
    }
    try {
        return run(args);
    } catch (const mimopnc::UsageError& e) {
        std::fprintf(stderr, "error: %s\n\n%s", e.what(), mimopnc::usage_text().c_str());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
