#pragma once

#include <cstdint>
#include <vector>

#include "mimopnc/detect.hpp"

namespace mimopnc {

enum class ChannelMode { rayleigh_block, fixed };

struct SimConfig {
    std::vector<double> snr_db_grid;
    std::uint64_t symbols_per_point{1'000'000};
    std::uint64_t seed{1};
    std::vector<DetectorId> detectors{kAllDetectors.begin(), kAllDetectors.end()};
    ChannelMode channel_mode{ChannelMode::rayleigh_block};
    Mat2 fixed_h{}; // used when channel_mode == fixed
    unsigned max_workers{0}; // 0 = hardware concurrency
};

struct BerRecord {
    DetectorId detector{};
    double snr_db{};
    std::uint64_t bits_total{};
    std::uint64_t bit_errors{};
    double ber{};
    std::uint64_t degenerate_count{};

    bool operator==(const BerRecord&) const = default;
};

/// Per-detector outcome of one symbol trial.
struct TrialResult {
    int bit_errors{}; // 0..2 wrong XOR bits
    bool degenerate{};
};

/// One Monte Carlo symbol: draw bits for both end nodes, channel, noise,
/// run every detector on the identical realization. Degenerate channels
/// are resolved with a fair-coin XOR guess so no trial is dropped.
std::vector<TrialResult> run_trial(RngStream& rng, const NoiseParams& sigma,
                                   const std::vector<DetectorId>& detectors,
                                   ChannelMode mode, const Mat2& fixed_h);

std::vector<BerRecord> run_point(const SimConfig& cfg, double snr_db);

std::vector<BerRecord> run_sweep(const SimConfig& cfg);

/// Horizontal dB shift between two BER curves at target_ber, interpolating
/// log10(ber) against snr_db. Positive means det_a reaches the target at a
/// lower SNR than det_b.
double estimate_gap_db(const std::vector<BerRecord>& records, DetectorId det_a,
                       DetectorId det_b, double target_ber);

} // namespace mimopnc
