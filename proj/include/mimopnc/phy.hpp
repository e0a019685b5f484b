#pragma once

#include <cstdint>

#include "mimopnc/linalg.hpp"

namespace mimopnc {

/// Two bits per QPSK symbol: b_re rides the real axis, b_im the imaginary.
struct BitPair {
    std::uint8_t b_re{};
    std::uint8_t b_im{};

    bool operator==(const BitPair&) const = default;
};

struct QpskSymbol {
    Cplx value;
};

struct NoiseParams {
    double sigma{};    // per-dimension standard deviation
    double sigma_sq{}; // per-dimension variance
};

/// Deterministic counter-based random substream. A (seed, stream_id) pair
/// identifies the stream; the sample sequence depends on nothing else, so
/// results are independent of thread count and platform.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_unit();

    /// Standard normal, Box-Muller.
    double next_gaussian();

private:
    std::uint64_t key_;
    std::uint64_t counter_{0};
    double spare_{0.0};
    bool has_spare_{false};
};

QpskSymbol modulate(BitPair bits);
BitPair demodulate_hard(Cplx s);
BitPair xor_bits(BitPair a, BitPair b);

/// SNR is 1/sigma^2 with sigma^2 the per-dimension noise variance.
NoiseParams snr_to_sigma(double snr_db);

/// Rayleigh channel: each entry complex Gaussian with E|h|^2 = 1.
Mat2 draw_channel(RngStream& rng);

/// Complex noise, independent Gaussian(0, sigma^2) per real dimension.
Vec2 draw_noise(RngStream& rng, const NoiseParams& p);

} // namespace mimopnc
