#include "poincare/algebra.hpp"

#include <cmath>

namespace poincare {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kFourPi = 4.0 * M_PI;

} // namespace

Matrix2c exp_traceless(const Matrix2c& m) {
    const cplx delta = std::sqrt(-m.det());
    cplx ch, shc; // cosh(δ), sinh(δ)/δ
    if (std::abs(delta) < 1e-4) {
        const cplx d2 = delta * delta;
        ch = 1.0 + d2 * (0.5 + d2 / 24.0);
        shc = 1.0 + d2 * (1.0 / 6.0 + d2 / 120.0);
    } else {
        ch = std::cosh(delta);
        shc = std::sinh(delta) / delta;
    }
    return Matrix2c{ch, 0.0, 0.0, ch} + shc * m;
}

cplx unit_ipow(cplx z, long n) {
    if (n < 0) {
        z = std::conj(z);
        n = -n;
    }
    cplx acc{1.0, 0.0};
    while (n > 0) {
        if (n & 1) acc *= z;
        z *= z;
        n >>= 1;
    }
    return acc;
}

UnitVector3::UnitVector3(double n1, double n2, double n3, double tol) : n1_(n1), n2_(n2), n3_(n3) {
    const double norm = std::sqrt(n1 * n1 + n2 * n2 + n3 * n3);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > tol)
        throw InvariantViolation("UnitVector3: length differs from 1 beyond tolerance");
}

UnitVector3 UnitVector3::normalized(double v1, double v2, double v3) {
    const double norm = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw InvariantViolation("UnitVector3: cannot normalize zero or non-finite vector");
    return UnitVector3(v1 / norm, v2 / norm, v3 / norm, 1e-9);
}

UnitVector3 spherical_direction(double theta, double phi) {
    const double s = std::sin(theta);
    return UnitVector3(s * std::cos(phi), s * std::sin(phi), std::cos(theta), 1e-9);
}

SL2CElement::SL2CElement(const Matrix2c& m) {
    if (!m.is_finite()) throw InvariantViolation("SL2CElement: non-finite entries");
    const cplx det = m.det();
    if (std::abs(det) < kSingularDetTol)
        throw SingularMatrixError("SL2CElement: |det| below 1e-8, cannot normalize");
    m_ = m * (1.0 / std::sqrt(det));
}

SU2Element::SU2Element(const Matrix2c& m, double tol) {
    if (!m.is_finite()) throw InvariantViolation("SU2Element: non-finite entries");
    const cplx det = m.det();
    if (std::abs(det) < kSingularDetTol)
        throw SingularMatrixError("SU2Element: |det| below 1e-8");
    m_ = m * (1.0 / std::sqrt(det));
    const double uni = distance_inf(m_.adjoint() * m_, Matrix2c::identity());
    if (uni > tol) throw InvariantViolation("SU2Element: unitarity residual exceeds tolerance");
}

LorentzMatrix LorentzMatrix::identity() {
    LorentzMatrix l;
    for (int i = 0; i < 4; ++i) l.a[i][i] = 1.0;
    return l;
}

FourVector LorentzMatrix::apply(const FourVector& p) const {
    const std::array<double, 4> v{p.p0, p.p1, p.p2, p.p3};
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += a[i][j] * v[j];
    return {r[0], r[1], r[2], r[3]};
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& o) const {
    LorentzMatrix r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * o.a[k][j];
            r.a[i][j] = s;
        }
    return r;
}

double LorentzMatrix::norm_inf() const {
    double m = 0.0;
    for (const auto& row : a)
        for (double x : row) m = std::max(m, std::abs(x));
    return m;
}

double distance_inf(const LorentzMatrix& x, const LorentzMatrix& y) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(x.a[i][j] - y.a[i][j]));
    return m;
}

double metric_residual(const LorentzMatrix& lam) {
    // g = diag(-1,1,1,1); residual = max |(ΛᵀgΛ - g)_{ij}|.
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = -lam.a[0][i] * lam.a[0][j];
            for (int k = 1; k < 4; ++k) s += lam.a[k][i] * lam.a[k][j];
            const double g = (i == j) ? (i == 0 ? -1.0 : 1.0) : 0.0;
            m = std::max(m, std::abs(s - g));
        }
    return m;
}

double det4(const LorentzMatrix& lam) {
    // Cofactor expansion along the first row.
    auto minor3 = [&](int col) {
        double b[3][3];
        for (int i = 1; i < 4; ++i) {
            int jj = 0;
            for (int j = 0; j < 4; ++j) {
                if (j == col) continue;
                b[i - 1][jj++] = lam.a[i][j];
            }
        }
        return b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
               b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
               b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    };
    double det = 0.0;
    double sign = 1.0;
    for (int j = 0; j < 4; ++j) {
        det += sign * lam.a[0][j] * minor3(j);
        sign = -sign;
    }
    return det;
}

void validate_lorentz(const LorentzMatrix& lam, double tol) {
    if (metric_residual(lam) > tol)
        throw InvariantViolation("LorentzMatrix: metric preservation residual exceeds tolerance");
    if (lam.a[0][0] < 1.0 - tol)
        throw InvariantViolation("LorentzMatrix: not orthochronous (Lambda^0_0 < 1)");
    if (std::abs(det4(lam) - 1.0) > tol)
        throw InvariantViolation("LorentzMatrix: determinant differs from +1");
}

E2Element::E2Element(double phi, cplx alpha) : alpha_(alpha) {
    if (!std::isfinite(phi) || !std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw InvariantViolation("E2Element: non-finite parameters");
    phi_ = std::fmod(phi, kFourPi);
    if (phi_ < 0.0) phi_ += kFourPi;
    diag_ = std::polar(1.0, 0.5 * phi_);
}

E2Element E2Element::from_diagonal(cplx diag, cplx alpha) {
    const double mod = std::abs(diag);
    if (!(mod > 0.0) || !std::isfinite(mod))
        throw InvariantViolation("E2Element: bad diagonal entry");
    E2Element h;
    h.diag_ = diag / mod;
    h.alpha_ = alpha;
    double phi = 2.0 * std::arg(h.diag_);
    if (phi < 0.0) phi += kFourPi;
    h.phi_ = phi;
    return h;
}

E2Element E2Element::compose(const E2Element& o) const {
    // [[d1,a1],[0,~d1]]·[[d2,a2],[0,~d2]] = [[d1 d2, d1 a2 + a1 ~d2],[0, ...]]
    return from_diagonal(diag_ * o.diag_, diag_ * o.alpha_ + alpha_ * std::conj(o.diag_));
}

double E2Element::rotation_angle_from_identity() const {
    return std::min(phi_, kFourPi - phi_);
}

Matrix2c pauli_form(const FourVector& p) {
    if (!p.is_finite()) throw InvariantViolation("pauli_form: non-finite four-vector");
    return {cplx(p.p0 + p.p3, 0.0), cplx(p.p1, -p.p2),
            cplx(p.p1, p.p2), cplx(p.p0 - p.p3, 0.0)};
}

FourVector four_vector_of(const Matrix2c& h, double tol) {
    const double scale = std::max(1.0, h.norm_inf());
    if (anti_hermitian_norm(h) > tol * scale)
        throw NonHermitianError("four_vector_of: anti-Hermitian part exceeds tolerance");
    return {0.5 * (h.a.real() + h.d.real()),
            0.5 * (h.b.real() + h.c.real()),
            0.5 * (h.c.imag() - h.b.imag()),
            0.5 * (h.a.real() - h.d.real())};
}

LorentzMatrix spinor_map(const SL2CElement& a) {
    const Matrix2c& m = a.matrix();
    const Matrix2c mdag = m.adjoint();
    const Matrix2c* sig[4] = {&sigma0(), &sigma1(), &sigma2(), &sigma3()};
    LorentzMatrix lam;
    for (int mu = 0; mu < 4; ++mu) {
        const Matrix2c h = m * (*sig[mu]) * mdag;
        lam.a[0][mu] = 0.5 * (h.a.real() + h.d.real());
        lam.a[1][mu] = 0.5 * (h.b.real() + h.c.real());
        lam.a[2][mu] = 0.5 * (h.c.imag() - h.b.imag());
        lam.a[3][mu] = 0.5 * (h.a.real() - h.d.real());
    }
    return lam;
}

SU2Element rotation_su2(const UnitVector3& axis, double angle) {
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    const cplx is(0.0, s);
    return SU2Element(Matrix2c{c + is * axis.n3(), is * (axis.n1() - cplx(0.0, 1.0) * axis.n2()),
                               is * (axis.n1() + cplx(0.0, 1.0) * axis.n2()), c - is * axis.n3()},
                      1e-10);
}

SL2CElement boost_su2_axis3(double rapidity) {
    return SL2CElement(Matrix2c{std::exp(-0.5 * rapidity), 0.0, 0.0, std::exp(0.5 * rapidity)});
}

SL2CElement boost_sl2(const UnitVector3& axis, double rapidity) {
    const double ch = std::cosh(0.5 * rapidity);
    const double sh = -std::sinh(0.5 * rapidity);
    return SL2CElement(Matrix2c{ch + sh * axis.n3(), sh * cplx(axis.n1(), -axis.n2()),
                                sh * cplx(axis.n1(), axis.n2()), ch - sh * axis.n3()});
}

SU2Element su2_a(double theta, double phi) {
    return rotation_su2(UnitVector3(std::sin(phi), -std::cos(phi), 0.0, 1e-9), theta);
}

SL2CElement e2_matrix(const E2Element& h) {
    return SL2CElement(Matrix2c{h.diagonal(), h.alpha(), 0.0, std::conj(h.diagonal())});
}

E2Element e2_recognize(const SL2CElement& a, double tol) {
    const Matrix2c& m = a.matrix();
    const double scale = std::max(1.0, m.norm_inf());
    if (std::abs(m.c) > tol * scale)
        throw NotInE2Error("e2_recognize: lower-left entry exceeds tolerance");
    if (std::abs(std::abs(m.a) - 1.0) > tol || std::abs(std::abs(m.d) - 1.0) > tol)
        throw NotInE2Error("e2_recognize: diagonal entry modulus differs from 1");
    return E2Element::from_diagonal(m.a, m.b);
}

} // namespace poincare
