#ifndef POINCARE_POLARIZATION_HPP
#define POINCARE_POLARIZATION_HPP

#include <string>

#include "poincare/massless.hpp"

namespace poincare {

/// Sharp-momentum state in the parity-doubled helicity space at fixed
/// lightlike momentum: amplitudes of the helicity +λ and -λ basis kets of
/// the tagged chart (unprimed kets in N, primed in S), unit norm.
class PolarizationState {
public:
    PolarizationState(const ChartedMomentum& cp, int lambda, cplx c_plus, cplx c_minus);

    const ChartedMomentum& charted_momentum() const { return cp_; }
    const LightlikeMomentum& momentum() const { return cp_.momentum(); }
    Chart chart() const { return cp_.chart(); }
    int lambda() const { return lambda_; }
    cplx c_plus() const { return c_plus_; }
    cplx c_minus() const { return c_minus_; }

    double norm_squared() const { return std::norm(c_plus_) + std::norm(c_minus_); }

private:
    ChartedMomentum cp_;
    int lambda_;
    cplx c_plus_, c_minus_;
};

/// Unit vector orthogonal to the spatial momentum, attached to a charted
/// momentum. Axis of the π-rotation that combines with parity to act as σ1.
struct TangentVector {
    ChartedMomentum cp;
    UnitVector3 e;
};

/// Chart-wise smooth tangent field:
///   chart N: e(p)  = n(π/2,0) - 2 sin(θ/2) cosφ · n(θ/2, φ)
///   chart S: e'(p) = n(π/2,0) - 2 cos(θ/2) cosφ · n((π+θ)/2, φ)
TangentVector tangent_field(const ChartedMomentum& cp);

/// The SU(2) product a(θ,φ)⁻¹ · e^{(iπ/2)e(p)·σ} · a(θ,φ) · e^{(iπ/2)σ2}
/// with e(p) the chart-N tangent vector; equals -iσ3 for every θ ∈ [0,π),
/// φ.
Matrix2c conjugation_identity(double theta, double phi);

/// P on the doubled space: momentum reflected, chart toggled, helicity
/// amplitudes swapped. Applying twice restores the state exactly.
PolarizationState parity_op(const PolarizationState& st);

/// Matrix of e^{iπ e(p)·J} P on the helicity basis (|p,+λ⟩, |p,-λ⟩) of the
/// tagged chart, computed through the parity transport rule and the
/// little-group factorization of the π-rotation about the tangent vector
/// (never postulated). Equals e^{iπλ} times the swap matrix.
Matrix2c parity_rotation_action(const ChartedMomentum& cp, int lambda);

/// The momentum-dependent Pauli triple on the polarization space.
struct SigmaOps {
    Matrix2c s1, s2, s3;
};

/// S3 is the λ-normalized helicity diag(1,-1); S1 is (-1)^λ times the
/// computed parity_rotation_action (the e^{iπλ} sign folded in; λ = 1 is
/// the photon case the correspondence was written for, other values are an
/// extrapolation of the same fold); S2 = i·S3·S1 exactly.
SigmaOps sigma_ops(const ChartedMomentum& cp, int lambda);

/// Basis change between the two chart descriptions of one state in the
/// overlap: the helicity-h amplitude picks up e^{+2ihφ} going N→S and
/// e^{-2ihφ} going S→N. Round trips are the identity to 1e-14.
PolarizationState convert_chart(const PolarizationState& st);

/// U(A): momentum to Λ(A)p, each helicity amplitude multiplied by the
/// Wigner phase e^{ihφ_W} of the little-group factor. Output chart is the
/// default (larger margin) unless forced; a forced inadmissible chart
/// throws ChartViolation.
PolarizationState transport_massless(const PolarizationState& st, const SL2CElement& a,
                                     std::optional<Chart> chart_policy = std::nullopt);

/// Documentation artifact for the absence of a global SU(2): the σ1
/// realizations at two momenta use π-rotations about different axes.
struct NoGlobalSU2Report {
    UnitVector3 e_p;
    UnitVector3 e_q;
    double angle_between;
    std::string realization_p;
    std::string realization_q;
};

NoGlobalSU2Report no_global_su2_check(const ChartedMomentum& p, const ChartedMomentum& q);

} // namespace poincare

#endif
