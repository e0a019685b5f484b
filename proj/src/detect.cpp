#include "mimopnc/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mimopnc {

namespace {

void require_nonsingular(const Mat2& h) {
    if (std::abs(h.det()) <= 1e-12 * h.frob_sq()) {
        throw DegenerateChannel("channel matrix is singular or near-singular");
    }
}

BitPair nc_combine(const QrFactors& f, const Vec2& w) {
    // Second layer first, then cancel its hard decision from the first.
    const Cplx x2_soft = w.b / f.r22();
    const BitPair b2 = demodulate_hard(x2_soft);
    const Cplx x2_sym = modulate(b2).value;
    const Cplx x1_soft = (w.a - f.r12() * x2_sym) / f.r11();
    const BitPair b1 = demodulate_hard(x1_soft);
    return xor_bits(b1, b2);
}

} // namespace

std::string detector_name(DetectorId id) {
    switch (id) {
        case DetectorId::vblast_nc: return "vblast-nc";
        case DetectorId::vblast_pnc: return "vblast-pnc";
        case DetectorId::sorted_vblast_nc: return "sorted-vblast-nc";
        case DetectorId::sorted_vblast_pnc: return "sorted-vblast-pnc";
        case DetectorId::linear_zf_nc: return "linear-zf-nc";
        case DetectorId::ml_oracle: return "ml-oracle";
    }
    return "unknown";
}

std::optional<DetectorId> detector_from_name(const std::string& name) {
    for (DetectorId id : kAllDetectors) {
        if (detector_name(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

PncCoefficient compute_k(double r11, Cplx r12) {
    if (!(r11 > 0.0)) {
        throw DegenerateChannel("compute_k: r11 must be positive");
    }
    // std::round ties away from zero.
    return {static_cast<int>(std::round(r12.real() / r11))};
}

BitPair pnc_map(Cplx est, int k) {
    if (k == 0) {
        throw InvalidCoefficient("pnc_map: k must be nonzero");
    }
    auto decide = [k](double e) -> std::uint8_t {
        // Equal transmitted bits give |x1 + k*x2| = |k| + 1 for k > 0
        // and |k| - 1 for k < 0; threshold at |k|.
        const bool equal = k > 0 ? std::abs(e) - k >= 0.0 : std::abs(e) + k <= 0.0;
        return equal ? 0 : 1;
    };
    return {decide(est.real()), decide(est.imag())};
}

QrFactors sorted_qr(const Mat2& h) {
    QrFactors f = qr_decompose(h);
    QrFactors fs = qr_decompose(swap_columns(h));
    return fs.r22() > f.r22() ? fs : f;
}

XorEstimate detect_vblast_nc(const DetectorInput& in, bool sorted) {
    require_nonsingular(in.h);
    const QrFactors f = sorted ? sorted_qr(in.h) : qr_decompose(in.h);
    const Vec2 w = apply_qh(f, in.y);
    return {nc_combine(f, w)};
}

XorEstimate detect_vblast_pnc(const DetectorInput& in, bool sorted) {
    require_nonsingular(in.h);
    const QrFactors f = sorted ? sorted_qr(in.h) : qr_decompose(in.h);
    const Vec2 w = apply_qh(f, in.y);

    const int k = compute_k(f.r11(), f.r12()).k;
    if (k == 0) {
        // r12 is already small; full cancellation propagates little error.
        return {nc_combine(f, w)};
    }

    const BitPair b2 = demodulate_hard(w.b / f.r22());
    const Cplx x2_sym = modulate(b2).value;
    const Cplx residual = f.r12() - static_cast<double>(k) * f.r11();
    const Cplx est = (w.a - residual * x2_sym) / f.r11();
    return {pnc_map(est, k)};
}

XorEstimate detect_linear_zf_nc(const DetectorInput& in) {
    require_nonsingular(in.h);
    const Cplx d = in.h.det();
    const Cplx x1 = (in.h.h22 * in.y.a - in.h.h12 * in.y.b) / d;
    const Cplx x2 = (in.h.h11 * in.y.b - in.h.h21 * in.y.a) / d;
    return {xor_bits(demodulate_hard(x1), demodulate_hard(x2))};
}

XorEstimate detect_ml_xor(const DetectorInput& in) {
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();

    // Log-likelihood accumulators per XOR bit hypothesis, log-sum-exp form.
    double acc_re[2] = {kNegInf, kNegInf};
    double acc_im[2] = {kNegInf, kNegInf};
    double best_dist = std::numeric_limits<double>::infinity();
    int best_xr = 0;
    int best_xi = 0;

    auto logsumexp = [](double a, double b) {
        if (a == kNegInf) return b;
        if (b == kNegInf) return a;
        const double m = std::max(a, b);
        return m + std::log(std::exp(a - m) + std::exp(b - m));
    };

    for (int i = 0; i < 16; ++i) {
        const BitPair b1{static_cast<std::uint8_t>(i & 1), static_cast<std::uint8_t>((i >> 1) & 1)};
        const BitPair b2{static_cast<std::uint8_t>((i >> 2) & 1), static_cast<std::uint8_t>((i >> 3) & 1)};
        const Vec2 x{modulate(b1).value, modulate(b2).value};
        const Vec2 hx = in.h.mul(x);
        const double dist = std::norm(in.y.a - hx.a) + std::norm(in.y.b - hx.b);
        const BitPair bx = xor_bits(b1, b2);
        if (dist < best_dist) {
            best_dist = dist;
            best_xr = bx.b_re;
            best_xi = bx.b_im;
        }
        if (in.noise.sigma > 0.0) {
            const double ll = -dist / (2.0 * in.noise.sigma_sq);
            acc_re[bx.b_re] = logsumexp(acc_re[bx.b_re], ll);
            acc_im[bx.b_im] = logsumexp(acc_im[bx.b_im], ll);
        }
    }

    if (in.noise.sigma == 0.0) {
        // Nearest-hypothesis decision.
        return {{static_cast<std::uint8_t>(best_xr), static_cast<std::uint8_t>(best_xi)}};
    }
    return {{static_cast<std::uint8_t>(acc_re[1] > acc_re[0] ? 1 : 0),
             static_cast<std::uint8_t>(acc_im[1] > acc_im[0] ? 1 : 0)}};
}

XorEstimate run_detector(DetectorId id, const DetectorInput& in) {
    switch (id) {
        case DetectorId::vblast_nc: return detect_vblast_nc(in, false);
        case DetectorId::vblast_pnc: return detect_vblast_pnc(in, false);
        case DetectorId::sorted_vblast_nc: return detect_vblast_nc(in, true);
        case DetectorId::sorted_vblast_pnc: return detect_vblast_pnc(in, true);
        case DetectorId::linear_zf_nc: return detect_linear_zf_nc(in);
        case DetectorId::ml_oracle: return detect_ml_xor(in);
    }
    throw ConfigError("unknown detector id");
}

} // namespace mimopnc
