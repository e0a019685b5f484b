#include "mimopnc/linalg.hpp"

#include <cmath>

namespace mimopnc {

namespace {

double norm2(const Vec2& v) {
    return std::sqrt(std::norm(v.a) + std::norm(v.b));
}

} // namespace

QrFactors qr_decompose(const Mat2& h) {
    const Vec2 c1 = h.col1();
    const Vec2 c2 = h.col2();

    const double r11 = norm2(c1);
    if (r11 < 1e-300) {
        throw DegenerateChannel("qr_decompose: first column norm underflows");
    }

    const Vec2 q1{c1.a / r11, c1.b / r11};
    const Cplx r12 = std::conj(q1.a) * c2.a + std::conj(q1.b) * c2.b;

    const Vec2 v{c2.a - r12 * q1.a, c2.b - r12 * q1.b};
    const double r22 = norm2(v);

    Vec2 q2;
    if (r22 > 0.0) {
        q2 = {v.a / r22, v.b / r22};
    } else {
        // Rank-deficient: complete the basis with the orthogonal complement of q1.
        q2 = {-std::conj(q1.b), std::conj(q1.a)};
    }

    QrFactors f;
    f.q = {q1.a, q2.a, q1.b, q2.b};
    f.r = {Cplx{r11, 0.0}, r12, Cplx{0.0, 0.0}, Cplx{r22, 0.0}};
    return f;
}

Vec2 apply_qh(const QrFactors& f, const Vec2& y) {
    return {
        std::conj(f.q.h11) * y.a + std::conj(f.q.h21) * y.b,
        std::conj(f.q.h12) * y.a + std::conj(f.q.h22) * y.b,
    };
}

Mat2 swap_columns(const Mat2& h) {
    return {h.h12, h.h11, h.h22, h.h21};
}

} // namespace mimopnc
