#pragma once

#include <complex>

#include "mimopnc/errors.hpp"

namespace mimopnc {

using Cplx = std::complex<double>;

struct Vec2 {
    Cplx a{};
    Cplx b{};
};

/// 2x2 complex matrix in row-major entry naming: [[h11 h12], [h21 h22]].
struct Mat2 {
    Cplx h11{};
    Cplx h12{};
    Cplx h21{};
    Cplx h22{};

    Vec2 col1() const { return {h11, h21}; }
    Vec2 col2() const { return {h12, h22}; }

    Cplx det() const { return h11 * h22 - h12 * h21; }

    double frob_sq() const {
        return std::norm(h11) + std::norm(h12) + std::norm(h21) + std::norm(h22);
    }

    Vec2 mul(const Vec2& x) const {
        return {h11 * x.a + h12 * x.b, h21 * x.a + h22 * x.b};
    }
};

/// QR factors with the canonical convention: r11 > 0, r22 >= 0 real,
/// r21 exactly zero. Q holds the two orthonormal columns.
struct QrFactors {
    Mat2 q;
    Mat2 r;

    double r11() const { return r.h11.real(); }
    Cplx r12() const { return r.h12; }
    double r22() const { return r.h22.real(); }
};

/// Gram-Schmidt QR of a 2x2 complex matrix with real nonnegative diagonal.
/// Throws DegenerateChannel when the first column norm underflows.
QrFactors qr_decompose(const Mat2& h);

/// W = Q^H * y.
Vec2 apply_qh(const QrFactors& f, const Vec2& y);

/// Exchange the two columns.
Mat2 swap_columns(const Mat2& h);

} // namespace mimopnc
