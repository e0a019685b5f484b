#include <doctest.h>

#include <cmath>

#include "mimopnc/linalg.hpp"
#include "mimopnc/phy.hpp"

using namespace mimopnc;

namespace {

double max_abs(const Mat2& m) {
    return std::max(std::max(std::abs(m.h11), std::abs(m.h12)),
                    std::max(std::abs(m.h21), std::abs(m.h22)));
}

Mat2 qr_product(const QrFactors& f) {
    // Q * R with R upper triangular.
    return {f.q.h11 * f.r.h11, f.q.h11 * f.r.h12 + f.q.h12 * f.r.h22,
            f.q.h21 * f.r.h11, f.q.h21 * f.r.h12 + f.q.h22 * f.r.h22};
}

Mat2 sub(const Mat2& a, const Mat2& b) {
    return {a.h11 - b.h11, a.h12 - b.h12, a.h21 - b.h21, a.h22 - b.h22};
}

Mat2 random_matrix(RngStream& rng) {
    return draw_channel(rng);
}

void check_qr_invariants(const Mat2& h) {
    const QrFactors f = qr_decompose(h);

    // Q^H Q = I
    const Cplx g11 = std::conj(f.q.h11) * f.q.h11 + std::conj(f.q.h21) * f.q.h21;
    const Cplx g12 = std::conj(f.q.h11) * f.q.h12 + std::conj(f.q.h21) * f.q.h22;
    const Cplx g22 = std::conj(f.q.h12) * f.q.h12 + std::conj(f.q.h22) * f.q.h22;
    CHECK(std::abs(g11 - 1.0) <= 1e-12);
    CHECK(std::abs(g12) <= 1e-12);
    CHECK(std::abs(g22 - 1.0) <= 1e-12);

    // QR = H
    CHECK(max_abs(sub(qr_product(f), h)) <= 1e-12 * max_abs(h));

    // canonical form
    CHECK(f.r.h21 == Cplx{0.0, 0.0});
    CHECK(f.r.h11.imag() == 0.0);
    CHECK(f.r.h22.imag() == 0.0);
    CHECK(f.r11() > 0.0);
    CHECK(f.r22() >= 0.0);
}

} // namespace

TEST_CASE("qr of identity is identity") {
    const Mat2 id{1.0, 0.0, 0.0, 1.0};
    const QrFactors f = qr_decompose(id);
    CHECK(max_abs(sub(f.q, id)) == 0.0);
    CHECK(max_abs(sub(f.r, id)) == 0.0);
}

TEST_CASE("qr of an upper triangular matrix with positive diagonal is trivial") {
    const Mat2 h{1.0, 1.5, 0.0, 0.5};
    const QrFactors f = qr_decompose(h);
    CHECK(max_abs(sub(f.q, Mat2{1.0, 0.0, 0.0, 1.0})) <= 1e-15);
    CHECK(max_abs(sub(f.r, h)) <= 1e-15);
}

TEST_CASE("qr invariants on random matrices") {
    RngStream rng(12345, 0);
    for (int i = 0; i < 10000; ++i) {
        check_qr_invariants(random_matrix(rng));
    }
}

TEST_CASE("qr of a rank-deficient matrix has r22 = 0 and orthonormal q") {
    const Mat2 h{Cplx{1.0, 1.0}, Cplx{2.0, 2.0}, Cplx{0.5, -0.5}, Cplx{1.0, -1.0}};
    const QrFactors f = qr_decompose(h);
    CHECK(f.r22() <= 1e-12);
    const Cplx g12 = std::conj(f.q.h11) * f.q.h12 + std::conj(f.q.h21) * f.q.h22;
    CHECK(std::abs(g12) <= 1e-12);
    const Cplx g22 = std::conj(f.q.h12) * f.q.h12 + std::conj(f.q.h22) * f.q.h22;
    CHECK(std::abs(g22 - 1.0) <= 1e-12);
}

TEST_CASE("qr rejects a zero first column") {
    CHECK_THROWS_AS(qr_decompose(Mat2{0.0, 1.0, 0.0, 1.0}), DegenerateChannel);
}

TEST_CASE("apply_qh with identity q is a no-op") {
    const QrFactors f = qr_decompose(Mat2{1.0, 0.0, 0.0, 1.0});
    const Vec2 y{Cplx{0.3, -1.2}, Cplx{4.5, 0.7}};
    const Vec2 w = apply_qh(f, y);
    CHECK(w.a == y.a);
    CHECK(w.b == y.b);
}

TEST_CASE("apply_qh maps Hx to Rx") {
    RngStream rng(99, 7);
    for (int i = 0; i < 100; ++i) {
        const Mat2 h = random_matrix(rng);
        const Vec2 x{Cplx{1.0, -1.0}, Cplx{-1.0, 1.0}};
        const Vec2 y = h.mul(x);
        const QrFactors f = qr_decompose(h);
        const Vec2 w = apply_qh(f, y);
        const Vec2 rx{f.r.h11 * x.a + f.r.h12 * x.b, f.r.h22 * x.b};
        CHECK(std::abs(w.a - rx.a) <= 1e-12 * std::abs(rx.a) + 1e-12);
        CHECK(std::abs(w.b - rx.b) <= 1e-12 * std::abs(rx.b) + 1e-12);
    }
}

TEST_CASE("apply_qh preserves the norm") {
    RngStream rng(4242, 1);
    for (int i = 0; i < 1000; ++i) {
        const Mat2 h = random_matrix(rng);
        const QrFactors f = qr_decompose(h);
        const Vec2 y{Cplx{rng.next_gaussian(), rng.next_gaussian()},
                     Cplx{rng.next_gaussian(), rng.next_gaussian()}};
        const Vec2 w = apply_qh(f, y);
        const double ny = std::sqrt(std::norm(y.a) + std::norm(y.b));
        const double nw = std::sqrt(std::norm(w.a) + std::norm(w.b));
        CHECK(std::abs(nw - ny) <= 1e-12 * ny);
    }
}

TEST_CASE("swap_columns definition and involution") {
    const Mat2 h{1.0, 2.0, 3.0, 4.0};
    const Mat2 s = swap_columns(h);
    CHECK(s.h11 == Cplx{2.0});
    CHECK(s.h12 == Cplx{1.0});
    CHECK(s.h21 == Cplx{4.0});
    CHECK(s.h22 == Cplx{3.0});

    const Mat2 e3{1.0, 1.5, 0.0, 0.5};
    const Mat2 e3s = swap_columns(e3);
    CHECK(e3s.h11 == Cplx{1.5});
    CHECK(e3s.h12 == Cplx{1.0});
    CHECK(e3s.h21 == Cplx{0.5});
    CHECK(e3s.h22 == Cplx{0.0});

    RngStream rng(7, 3);
    for (int i = 0; i < 100; ++i) {
        const Mat2 m = random_matrix(rng);
        const Mat2 twice = swap_columns(swap_columns(m));
        CHECK(max_abs(sub(twice, m)) == 0.0);
    }
}

TEST_CASE("qr is deterministic") {
    const Mat2 h{Cplx{0.4, 1.1}, Cplx{-2.0, 0.3}, Cplx{1.7, -0.9}, Cplx{0.2, 0.8}};
    const QrFactors a = qr_decompose(h);
    const QrFactors b = qr_decompose(h);
    CHECK(max_abs(sub(a.q, b.q)) == 0.0);
    CHECK(max_abs(sub(a.r, b.r)) == 0.0);
}
