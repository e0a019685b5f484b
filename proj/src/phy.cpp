#include "mimopnc/phy.hpp"

#include <cmath>
#include <numbers>

namespace mimopnc {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// 64-bit finalizer (murmur3 variant).
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdULL;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ULL;
    z ^= z >> 33;
    return z;
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_(mix64(mix64(seed + kGolden) ^ mix64(stream_id ^ 0x6a09e667f3bcc909ULL))) {}

std::uint64_t RngStream::next_u64() {
    return mix64(key_ + kGolden * ++counter_);
}

double RngStream::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - next_unit();
    const double u2 = next_unit();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang);
}

QpskSymbol modulate(BitPair bits) {
    return {Cplx{bits.b_re ? -1.0 : 1.0, bits.b_im ? -1.0 : 1.0}};
}

BitPair demodulate_hard(Cplx s) {
    // Tie (exact zero) resolves to bit 0.
    return {static_cast<std::uint8_t>(s.real() >= 0.0 ? 0 : 1),
            static_cast<std::uint8_t>(s.imag() >= 0.0 ? 0 : 1)};
}

BitPair xor_bits(BitPair a, BitPair b) {
    return {static_cast<std::uint8_t>(a.b_re ^ b.b_re),
            static_cast<std::uint8_t>(a.b_im ^ b.b_im)};
}

NoiseParams snr_to_sigma(double snr_db) {
    const double sigma_sq = std::pow(10.0, -snr_db / 10.0);
    return {std::sqrt(sigma_sq), sigma_sq};
}

Mat2 draw_channel(RngStream& rng) {
    const double s = std::numbers::sqrt2 / 2.0; // variance 1/2 per dimension
    auto entry = [&] { return Cplx{s * rng.next_gaussian(), s * rng.next_gaussian()}; };
    Mat2 h;
    h.h11 = entry();
    h.h12 = entry();
    h.h21 = entry();
    h.h22 = entry();
    return h;
}

Vec2 draw_noise(RngStream& rng, const NoiseParams& p) {
    if (p.sigma == 0.0) {
        return {Cplx{0.0, 0.0}, Cplx{0.0, 0.0}};
    }
    auto entry = [&] {
        return Cplx{p.sigma * rng.next_gaussian(), p.sigma * rng.next_gaussian()};
    };
    return {entry(), entry()};
}

} // namespace mimopnc
