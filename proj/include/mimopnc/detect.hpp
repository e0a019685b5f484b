#pragma once

#include <array>
#include <optional>
#include <string>

#include "mimopnc/linalg.hpp"
#include "mimopnc/phy.hpp"

namespace mimopnc {

enum class DetectorId {
    vblast_nc,
    vblast_pnc,
    sorted_vblast_nc,
    sorted_vblast_pnc,
    linear_zf_nc,
    ml_oracle,
};

inline constexpr std::array<DetectorId, 6> kAllDetectors = {
    DetectorId::vblast_nc,        DetectorId::vblast_pnc,
    DetectorId::sorted_vblast_nc, DetectorId::sorted_vblast_pnc,
    DetectorId::linear_zf_nc,     DetectorId::ml_oracle,
};

std::string detector_name(DetectorId id);
std::optional<DetectorId> detector_from_name(const std::string& name);

struct DetectorInput {
    Vec2 y;
    Mat2 h;
    NoiseParams noise; // used only by the ML oracle
};

struct XorEstimate {
    BitPair bits;
};

struct PncCoefficient {
    int k{};
};

/// Nearest integer to real(r12)/r11, ties rounded away from zero.
PncCoefficient compute_k(double r11, Cplx r12);

/// Per-dimension threshold decision on an estimate of x1 + k*x2.
/// Bit 0 means the two transmitted bits were equal.
BitPair pnc_map(Cplx est, int k);

XorEstimate detect_vblast_nc(const DetectorInput& in, bool sorted);
XorEstimate detect_vblast_pnc(const DetectorInput& in, bool sorted);
XorEstimate detect_linear_zf_nc(const DetectorInput& in);
XorEstimate detect_ml_xor(const DetectorInput& in);

XorEstimate run_detector(DetectorId id, const DetectorInput& in);

/// QR of h or of the column-swapped h, whichever yields the larger r22.
/// The swap is taken only when strictly larger.
QrFactors sorted_qr(const Mat2& h);

} // namespace mimopnc
