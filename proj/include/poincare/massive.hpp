#ifndef POINCARE_MASSIVE_HPP
#define POINCARE_MASSIVE_HPP

#include <vector>

#include "poincare/algebra.hpp"

namespace poincare {

/// On-shell timelike momentum: mass and spatial components are stored, the
/// energy is always derived as √(m² + p⃗²) so the mass shell holds by
/// construction.
class MassiveMomentum {
public:
    MassiveMomentum(double mass, double p1, double p2, double p3);

    static MassiveMomentum rest(double mass) { return {mass, 0.0, 0.0, 0.0}; }

    double mass() const { return m_; }
    double p1() const { return p1_; }
    double p2() const { return p2_; }
    double p3() const { return p3_; }
    double energy() const;

    FourVector four_vector() const;

    /// Spatial inversion (m, -p⃗); exact on the stored fields.
    MassiveMomentum tilde() const { return {m_, -p1_, -p2_, -p3_}; }

private:
    double m_, p1_, p2_, p3_;
};

/// Sharp-momentum spin state: (2s+1) amplitudes over s3 = s, s-1, ..., -s,
/// unit norm, with an intrinsic parity sign.
class SpinState {
public:
    SpinState(int twice_s, const MassiveMomentum& p, std::vector<cplx> amplitudes, int eta);

    int twice_s() const { return twice_s_; }
    double spin() const { return 0.5 * twice_s_; }
    const MassiveMomentum& momentum() const { return p_; }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    int eta() const { return eta_; }

    double norm_squared() const;

private:
    int twice_s_;
    MassiveMomentum p_;
    std::vector<cplx> amps_;
    int eta_;
};

/// Standard boost ℓ(p) = (m + p·σ)/√(2m(m+p0)); Hermitian positive, carries
/// the rest momentum (m,0,0,0) to p, and ℓ(rest) = 1.
SL2CElement boost_massive(const MassiveMomentum& p);

/// Wigner rotation a(p,A) = ℓ(Λ(A)p)⁻¹ A ℓ(p) ∈ SU(2).
SU2Element wigner_rotation_massive(const MassiveMomentum& p, const SL2CElement& a);

/// Unitary spin-s representation matrix, (2s+1)², row-major, rows and
/// columns ordered s3 = s, s-1, ..., -s.
struct DMatrix {
    int dim{0};
    std::vector<cplx> m; // row-major

    cplx at(int r, int c) const { return m[static_cast<size_t>(r) * dim + c]; }
};

/// D^{(s)}(a) built from the ladder-operator generators: the axis and angle
/// of a are extracted (angle in [0,2π] from the trace, axis from the
/// traceless part) and ω n⃗·J⃗ is exponentiated by eigendecomposition. This
/// keeps the double cover faithful for half-integer s. Throws
/// UnsupportedSpinError for 2s > 20.
DMatrix wigner_D(const SU2Element& a, int twice_s);

DMatrix dmatrix_multiply(const DMatrix& x, const DMatrix& y);
double dmatrix_distance_inf(const DMatrix& x, const DMatrix& y);
double dmatrix_unitarity_residual(const DMatrix& x);

/// U(A): momentum to Λ(A)p, amplitudes through D^{(s)} of the Wigner
/// rotation. Norm is preserved.
SpinState transport_massive(const SpinState& state, const SL2CElement& a);

/// P: spatial momentum negated, every amplitude multiplied by η. Involutive
/// on the stored fields exactly.
SpinState parity_massive(const SpinState& state);

} // namespace poincare

#endif
