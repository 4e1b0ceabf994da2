#ifndef POINCARE_ALGEBRA_HPP
#define POINCARE_ALGEBRA_HPP

#include <array>
#include <optional>

#include "poincare/complex2.hpp"
#include "poincare/errors.hpp"

namespace poincare {

// Default tolerances. Constructor invariants are tightest, derived identity
// checks get one order of headroom per composition depth, and E(2)
// membership the most.
inline constexpr double kConstructorTol = 1e-12;
inline constexpr double kIdentityTol = 1e-10;
inline constexpr double kE2MembershipTol = 1e-9;
inline constexpr double kSingularDetTol = 1e-8;

/// Real Minkowski four-vector, metric diag(-1,+1,+1,+1), natural units.
struct FourVector {
    double p0{0.0}, p1{0.0}, p2{0.0}, p3{0.0};

    constexpr FourVector() = default;
    constexpr FourVector(double t, double x, double y, double z) : p0(t), p1(x), p2(y), p3(z) {}

    /// Space-reflected partner p̃ = (p0, -p⃗). Component negation is exact.
    constexpr FourVector tilde() const { return {p0, -p1, -p2, -p3}; }

    /// Minkowski square p^μ p_μ = -p0² + |p⃗|².
    double squared() const { return -p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3; }

    double dot(const FourVector& q) const {
        return -p0 * q.p0 + p1 * q.p1 + p2 * q.p2 + p3 * q.p3;
    }

    FourVector operator+(const FourVector& q) const {
        return {p0 + q.p0, p1 + q.p1, p2 + q.p2, p3 + q.p3};
    }
    FourVector operator-(const FourVector& q) const {
        return {p0 - q.p0, p1 - q.p1, p2 - q.p2, p3 - q.p3};
    }
    FourVector operator*(double s) const { return {p0 * s, p1 * s, p2 * s, p3 * s}; }

    double norm_inf() const {
        return std::max(std::max(std::abs(p0), std::abs(p1)),
                        std::max(std::abs(p2), std::abs(p3)));
    }

    bool is_finite() const {
        return std::isfinite(p0) && std::isfinite(p1) && std::isfinite(p2) && std::isfinite(p3);
    }
};

inline double distance_inf(const FourVector& x, const FourVector& y) {
    return (x - y).norm_inf();
}

/// Real 3-vector of unit length.
class UnitVector3 {
public:
    UnitVector3(double n1, double n2, double n3, double tol = kConstructorTol);

    /// Normalizes the input instead of validating it.
    static UnitVector3 normalized(double v1, double v2, double v3);

    double n1() const { return n1_; }
    double n2() const { return n2_; }
    double n3() const { return n3_; }

    UnitVector3 operator-() const { return UnitVector3(-n1_, -n2_, -n3_, 1.0); }

    double dot(const UnitVector3& o) const { return n1_ * o.n1_ + n2_ * o.n2_ + n3_ * o.n3_; }

private:
    double n1_, n2_, n3_;
};

/// Direction at polar angle theta from +z, azimuth phi:
/// n = (sinθ cosφ, sinθ sinφ, cosθ).
UnitVector3 spherical_direction(double theta, double phi);

/// Element of SL(2,C): unit-determinant 2x2 complex matrix. Constructors
/// normalize by the principal square root of the determinant and reject
/// near-singular input, so sampled matrices stay in the group.
class SL2CElement {
public:
    explicit SL2CElement(const Matrix2c& m);

    static SL2CElement identity() { return SL2CElement(Matrix2c::identity()); }

    const Matrix2c& matrix() const { return m_; }

    SL2CElement operator*(const SL2CElement& o) const { return SL2CElement(m_ * o.m_); }
    SL2CElement inverse() const { return SL2CElement(m_.inverse()); }
    SL2CElement adjoint_inverse() const { return SL2CElement(m_.adjoint().inverse()); }
    SL2CElement negated() const { return SL2CElement(-m_); }

private:
    Matrix2c m_;
};

/// Element of SU(2) ⊂ SL(2,C). Validates unitarity on construction; the
/// tolerance widens for elements assembled from long products (the Wigner
/// rotation lands in SU(2) only to 1e-10).
class SU2Element {
public:
    explicit SU2Element(const Matrix2c& m, double tol = kConstructorTol);

    static SU2Element identity() { return SU2Element(Matrix2c::identity()); }

    const Matrix2c& matrix() const { return m_; }
    SL2CElement as_sl2c() const { return SL2CElement(m_); }

    SU2Element operator*(const SU2Element& o) const { return SU2Element(m_ * o.m_, 1e-10); }
    SU2Element inverse() const { return SU2Element(m_.adjoint(), 1e-10); }

private:
    Matrix2c m_;
};

/// Proper orthochronous Lorentz matrix Λ, row index first.
struct LorentzMatrix {
    std::array<std::array<double, 4>, 4> a{};

    static LorentzMatrix identity();

    FourVector apply(const FourVector& p) const;
    LorentzMatrix operator*(const LorentzMatrix& o) const;

    double norm_inf() const;
};

double distance_inf(const LorentzMatrix& x, const LorentzMatrix& y);

/// ‖Λᵀ g Λ - g‖∞ with g = diag(-1,1,1,1).
double metric_residual(const LorentzMatrix& lam);

double det4(const LorentzMatrix& lam);

/// Throws InvariantViolation unless Λ preserves the metric, has Λ⁰₀ ≥ 1 and
/// det Λ = +1 within tol.
void validate_lorentz(const LorentzMatrix& lam, double tol = kIdentityTol);

/// Little-group element h(φ,α) stabilizing the fiducial lightlike momentum:
/// upper triangular with diagonal (e^{iφ/2}, e^{-iφ/2}), φ ∈ [0,4π), α ∈ C.
/// The unit diagonal entry is kept alongside φ so that integer-helicity
/// phases can be taken as powers of the matrix diagonal, branch-free.
class E2Element {
public:
    E2Element() : E2Element(0.0, cplx(0.0)) {}
    E2Element(double phi, cplx alpha);

    /// Builds from a recognized matrix diagonal (unit modulus enforced by
    /// normalization) without going through an angle rematerialization.
    static E2Element from_diagonal(cplx diag, cplx alpha);

    double phi() const { return phi_; }
    cplx alpha() const { return alpha_; }
    /// e^{iφ/2} as recognized or materialized.
    cplx diagonal() const { return diag_; }

    /// Group composition h(φ₁,α₁)·h(φ₂,α₂).
    E2Element compose(const E2Element& o) const;

    /// Distance of the rotation angle from 0 mod 4π (the "pure translation"
    /// test used by the alternative-coset relations).
    double rotation_angle_from_identity() const;

private:
    double phi_;
    cplx alpha_;
    cplx diag_;
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

/// p·σ = p0·1 + p⃗·σ⃗. Hermitian; trace 2p0; det = -p^μ p_μ.
Matrix2c pauli_form(const FourVector& p);

/// Inverse of pauli_form via p^ν = ½ tr(σ_ν H). Throws NonHermitianError if
/// the anti-Hermitian part of H exceeds tol·max(1,‖H‖∞).
FourVector four_vector_of(const Matrix2c& h, double tol = kIdentityTol);

/// The two-to-one homomorphism SL(2,C) → SO(3,1)↑: column μ of Λ(A) is the
/// Pauli expansion of A σ_μ A†. Satisfies Λ(A')Λ(A) = Λ(A'A) and
/// Λ(-A) = Λ(A).
LorentzMatrix spinor_map(const SL2CElement& a);

/// exp(i·angle·(axis·σ)/2). Under spinor_map this acts on space vectors as
/// the right-handed rotation by `angle` about -axis (the convention fixed by
/// reading off columns of Λ).
SU2Element rotation_su2(const UnitVector3& axis, double angle);

/// exp(-(rapidity/2)σ3) = diag(e^{-v/2}, e^{v/2}).
SL2CElement boost_su2_axis3(double rapidity);

/// General pure boost exp(-(rapidity/2)·axis·σ); Hermitian positive.
SL2CElement boost_sl2(const UnitVector3& axis, double rapidity);

/// a(θ,φ) = exp[(iθ/2)(σ1 sinφ - σ2 cosφ)]. Carries n(θ',φ) to n(θ'+θ,φ)
/// under conjugation and satisfies a(θ,φ) = a(-θ,π+φ).
SU2Element su2_a(double theta, double phi);

/// Materializes h(φ,α) as [[e^{iφ/2}, α],[0, e^{-iφ/2}]].
SL2CElement e2_matrix(const E2Element& h);

/// Recognizes an upper-triangular unit-diagonal-modulus matrix as an E(2)
/// element: φ = 2·arg(A₁₁) lifted to [0,4π), α = A₁₂. Throws NotInE2Error if
/// |A₂₁| > tol·‖A‖∞ or a diagonal modulus is off unity by more than tol.
E2Element e2_recognize(const SL2CElement& a, double tol = kE2MembershipTol);

} // namespace poincare

#endif
