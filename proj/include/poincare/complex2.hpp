#ifndef POINCARE_COMPLEX2_HPP
#define POINCARE_COMPLEX2_HPP

#include <array>
#include <cmath>
#include <complex>

namespace poincare {

using cplx = std::complex<double>;

/// Dense 2x2 complex matrix, row-major. Carrier for every group element in
/// the library: SL(2,C) matrices, Pauli forms p·σ, little-group elements.
struct Matrix2c {
    // entries: a b
    //          c d
    cplx a{0.0}, b{0.0}, c{0.0}, d{0.0};

    constexpr Matrix2c() = default;
    constexpr Matrix2c(cplx a_, cplx b_, cplx c_, cplx d_) : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Matrix2c identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }

    Matrix2c adjoint() const {
        return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
    }

    Matrix2c transpose() const { return {a, c, b, d}; }
    Matrix2c conjugate() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }

    Matrix2c operator+(const Matrix2c& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Matrix2c operator-(const Matrix2c& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Matrix2c operator-() const { return {-a, -b, -c, -d}; }

    Matrix2c operator*(const Matrix2c& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }

    Matrix2c operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }
    friend Matrix2c operator*(cplx s, const Matrix2c& m) { return m * s; }

    /// Inverse via the exact 2x2 cofactor formula. Caller guarantees the
    /// determinant is away from zero.
    Matrix2c inverse() const {
        const cplx idet = 1.0 / det();
        return {d * idet, -b * idet, -c * idet, a * idet};
    }

    double norm_inf() const {
        return std::max(std::max(std::abs(a), std::abs(b)),
                        std::max(std::abs(c), std::abs(d)));
    }

    bool is_finite() const {
        auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
        return ok(a) && ok(b) && ok(c) && ok(d);
    }
};

inline double norm_inf(const Matrix2c& m) { return m.norm_inf(); }

inline double distance_inf(const Matrix2c& x, const Matrix2c& y) { return (x - y).norm_inf(); }

/// Largest entry of the anti-Hermitian part (H - H†)/2.
inline double anti_hermitian_norm(const Matrix2c& h) {
    return 0.5 * distance_inf(h, h.adjoint());
}

// Pauli matrices. sigma0 is the identity.
inline const Matrix2c& sigma0() {
    static const Matrix2c m{1.0, 0.0, 0.0, 1.0};
    return m;
}
inline const Matrix2c& sigma1() {
    static const Matrix2c m{0.0, 1.0, 1.0, 0.0};
    return m;
}
inline const Matrix2c& sigma2() {
    static const Matrix2c m{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
    return m;
}
inline const Matrix2c& sigma3() {
    static const Matrix2c m{1.0, 0.0, 0.0, -1.0};
    return m;
}

/// exp(M) for traceless M via the closed form
///   exp(M) = cosh(δ)·I + sinh(δ)/δ · M,   δ² = -det M.
/// Either branch of the square root works: both cosh and sinh(δ)/δ are even.
Matrix2c exp_traceless(const Matrix2c& m);

/// z^n for integer n (exponentiation by squaring; negative n uses the
/// conjugate, valid for the unit-modulus arguments this library feeds it).
cplx unit_ipow(cplx z, long n);

} // namespace poincare

#endif
