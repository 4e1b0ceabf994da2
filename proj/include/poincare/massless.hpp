#ifndef POINCARE_MASSLESS_HPP
#define POINCARE_MASSLESS_HPP

#include <optional>

#include "poincare/algebra.hpp"

namespace poincare {

/// Positive lightlike momentum stored as energy plus unit direction, so
/// p^μ p_μ = 0 holds by construction and spatial inversion is exact (the
/// direction vector is negated bitwise and a mirror flag reflects the angle
/// anchors; applying it twice restores every stored field).
///
/// The (theta, phi) anchors are kept as constructed: they are what the JSON
/// encoding emits, which makes encode -> decode -> encode byte-stable.
class LightlikeMomentum {
public:
    /// From energy and spherical angles, theta in [0,pi], phi folded to
    /// [0,2pi).
    LightlikeMomentum(double p0, double theta, double phi);

    /// From energy and an (unnormalized) spatial direction. Angles are
    /// derived with atan2 conventions; phi is 0 at the poles.
    static LightlikeMomentum from_direction(double p0, double v1, double v2, double v3);

    static LightlikeMomentum fiducial() { return LightlikeMomentum(1.0, 0.0, 0.0); }

    double p0() const { return p0_; }
    double theta() const;
    double phi() const;

    double nx() const { return n1_; }
    double ny() const { return n2_; }
    double nz() const { return n3_; }
    double cos_theta() const { return n3_; }

    UnitVector3 direction() const { return UnitVector3(n1_, n2_, n3_, 1e-9); }
    FourVector four_vector() const { return {p0_, p0_ * n1_, p0_ * n2_, p0_ * n3_}; }

    /// Light-cone combinations p± = p0(1 ± cosθ).
    double plus_component() const { return p0_ * (1.0 + n3_); }
    double minus_component() const { return p0_ * (1.0 - n3_); }

    /// Space-reflected momentum p̃; exact involution on stored fields.
    LightlikeMomentum tilde() const;

    /// Exact stored-field identity (not geometric closeness).
    bool operator==(const LightlikeMomentum& o) const;

private:
    LightlikeMomentum() = default;

    double p0_{1.0};
    double theta_{0.0}, phi_{0.0}; // anchor angles as constructed
    bool mirrored_{false};
    double n1_{0.0}, n2_{0.0}, n3_{1.0}; // effective unit direction
};

/// The two coordinate patches on the forward light cone: N misses the
/// south ray (needs p+ > 0), S misses the north ray (needs p- > 0).
enum class Chart { N, S };

inline Chart other_chart(Chart c) { return c == Chart::N ? Chart::S : Chart::N; }
inline const char* chart_name(Chart c) { return c == Chart::N ? "N" : "S"; }

/// A chart is refused when its light-cone coordinate margin 1±cosθ drops
/// below 1e-12.
inline constexpr double kChartMargin = 1e-12;

bool chart_admissible(const LightlikeMomentum& p, Chart chart);

/// Chart with the larger margin: N when cosθ ≥ 0, else S.
Chart default_chart(const LightlikeMomentum& p);

struct ChartSet {
    bool has_n{false};
    bool has_s{false};

    bool contains(Chart c) const { return c == Chart::N ? has_n : has_s; }
    int count() const { return (has_n ? 1 : 0) + (has_s ? 1 : 0); }
};

ChartSet charts_of(const LightlikeMomentum& p);

/// Lightlike momentum tagged with an admissible chart.
class ChartedMomentum {
public:
    ChartedMomentum(const LightlikeMomentum& p, Chart chart);

    /// Tags with the default chart.
    explicit ChartedMomentum(const LightlikeMomentum& p)
        : ChartedMomentum(p, default_chart(p)) {}

    const LightlikeMomentum& momentum() const { return p_; }
    Chart chart() const { return chart_; }

    /// Reflected momentum in the toggled chart (always admissible).
    ChartedMomentum parity_partner() const { return {p_.tilde(), other_chart(chart_)}; }

private:
    LightlikeMomentum p_;
    Chart chart_;
};

/// Λ(A)p for lightlike p: conjugate the Pauli form, read the four-vector
/// back, check it is still on the cone (relative tolerance 1e-8) and rebuild
/// from energy |p⃗'| plus direction.
LightlikeMomentum lightlike_transform(const LightlikeMomentum& p, const SL2CElement& a);

/// Step-by-step coset representative carrying (1,0,0,1) to p:
///   chart N: ℓ(p)  = a(θ,φ)·exp(½ ln p0 · σ3)
///   chart S: ℓ'(p) = a(θ-π,φ)·exp(-½ ln p0 · σ3)·iσ2
SL2CElement coset_rep(const ChartedMomentum& cp);

/// Algebraic (boost-like) coset representative:
///   chart N: (2p₊)^{-1/2} (p̃⁽⁰⁾+p)·σ
///   chart S: (2p₋)^{-1/2} (p⁽⁰⁾-p)·σ·σ1
/// E(2)-related to coset_rep on the right; selects the same rays.
SL2CElement coset_rep_alt(const ChartedMomentum& cp);

/// The element relating the two families in the overlap:
/// ℓ'(p) = ℓ(p)·h(2(π-φ), 0). Throws NotInOverlapError outside it.
E2Element overlap_element(const LightlikeMomentum& p);

/// Little-group (Wigner) element ℓ_out(Λ(A)p)⁻¹ · A · ℓ_in(p). Throws
/// ChartViolation if chart_out is inadmissible for the transformed momentum;
/// NotInE2Error cannot occur for valid inputs short of a fault.
E2Element little_group(const ChartedMomentum& cp, const SL2CElement& a, Chart chart_out,
                       double tol = kE2MembershipTol);

/// As little_group, but against a caller-supplied transformed momentum (used
/// by state transport so the momentum and the phase come from one
/// extraction).
E2Element little_group_at(const ChartedMomentum& cp, const SL2CElement& a,
                          const ChartedMomentum& out, double tol = kE2MembershipTol);

/// e^{iλφ} as the 2λ-th power of the E(2) diagonal; branch-free for integer
/// λ and unit modulus.
cplx wigner_phase(const E2Element& h, long lambda);

} // namespace poincare

#endif
