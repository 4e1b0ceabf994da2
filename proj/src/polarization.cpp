#include "poincare/polarization.hpp"

#include <cmath>
#include <cstdio>

namespace poincare {

namespace {

UnitVector3 tangent_n(double theta, double phi) {
    const double w = 2.0 * std::sin(0.5 * theta) * std::cos(phi);
    const double sh = std::sin(0.5 * theta), ch = std::cos(0.5 * theta);
    return UnitVector3(1.0 - w * sh * std::cos(phi), -w * sh * std::sin(phi), -w * ch, 1e-9);
}

UnitVector3 tangent_s(double theta, double phi) {
    const double w = 2.0 * std::cos(0.5 * theta) * std::cos(phi);
    const double half = 0.5 * (M_PI + theta);
    const double sh = std::sin(half), ch = std::cos(half);
    return UnitVector3(1.0 - w * sh * std::cos(phi), -w * sh * std::sin(phi), -w * ch, 1e-9);
}

std::string describe_realization(const char* which, const UnitVector3& e) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "S1 at %s = -exp(i pi e.J) P with rotation axis e = (%.17g, %.17g, %.17g)",
                  which, e.n1(), e.n2(), e.n3());
    return buf;
}

} // namespace

PolarizationState::PolarizationState(const ChartedMomentum& cp, int lambda, cplx c_plus,
                                     cplx c_minus)
    : cp_(cp), lambda_(lambda), c_plus_(c_plus), c_minus_(c_minus) {
    if (lambda_ < 1) throw InvariantViolation("PolarizationState: lambda must be a positive integer");
    if (std::abs(norm_squared() - 1.0) > kConstructorTol)
        throw InvariantViolation("PolarizationState: amplitudes not unit norm");
}

TangentVector tangent_field(const ChartedMomentum& cp) {
    const LightlikeMomentum& p = cp.momentum();
    const UnitVector3 e = cp.chart() == Chart::N ? tangent_n(p.theta(), p.phi())
                                                 : tangent_s(p.theta(), p.phi());
    return {cp, e};
}

Matrix2c conjugation_identity(double theta, double phi) {
    const Matrix2c a = su2_a(theta, phi).matrix();
    const Matrix2c rot_e = rotation_su2(tangent_n(theta, phi), M_PI).matrix();
    const Matrix2c rot_y = rotation_su2(UnitVector3(0.0, 1.0, 0.0), M_PI).matrix();
    return a.inverse() * rot_e * a * rot_y;
}

PolarizationState parity_op(const PolarizationState& st) {
    return PolarizationState(st.charted_momentum().parity_partner(), st.lambda(), st.c_minus(),
                             st.c_plus());
}

Matrix2c parity_rotation_action(const ChartedMomentum& cp, int lambda) {
    // P takes the helicity-h ket at p (tagged chart) to the helicity_(-h)
    // ket at p̃ in the toggled chart; the π-rotation about the tangent
    // vector carries it back to p. Its little-group factor against the
    // original basis supplies the phase.
    const SL2CElement rot = rotation_su2(tangent_field(cp).e, M_PI).as_sl2c();
    const E2Element w = little_group_at(cp.parity_partner(), rot, cp);
    const cplx phase_from_plus = wigner_phase(w, -lambda); // lands on helicity -λ
    const cplx phase_from_minus = wigner_phase(w, lambda);
    return {0.0, phase_from_minus, phase_from_plus, 0.0};
}

SigmaOps sigma_ops(const ChartedMomentum& cp, int lambda) {
    if (lambda < 1) throw InvariantViolation("sigma_ops: lambda must be a positive integer");
    const double sign = (lambda % 2 == 0) ? 1.0 : -1.0; // e^{-iπλ}
    SigmaOps ops;
    ops.s1 = sign * parity_rotation_action(cp, lambda);
    ops.s3 = Matrix2c{1.0, 0.0, 0.0, -1.0};
    ops.s2 = cplx(0.0, 1.0) * (ops.s3 * ops.s1);
    return ops;
}

PolarizationState convert_chart(const PolarizationState& st) {
    const LightlikeMomentum& p = st.momentum();
    if (charts_of(p).count() != 2)
        throw NotInOverlapError("convert_chart: momentum is not in the chart overlap");
    const double sign = st.chart() == Chart::N ? 1.0 : -1.0;
    const double arg = sign * 2.0 * st.lambda() * p.phi();
    const cplx z = std::polar(1.0, arg);
    return PolarizationState(ChartedMomentum(p, other_chart(st.chart())), st.lambda(),
                             st.c_plus() * z, st.c_minus() * std::conj(z));
}

PolarizationState transport_massless(const PolarizationState& st, const SL2CElement& a,
                                     std::optional<Chart> chart_policy) {
    const LightlikeMomentum q = lightlike_transform(st.momentum(), a);
    const Chart out_chart = chart_policy.value_or(default_chart(q));
    const ChartedMomentum out(q, out_chart);
    const E2Element w = little_group_at(st.charted_momentum(), a, out);
    return PolarizationState(out, st.lambda(), wigner_phase(w, st.lambda()) * st.c_plus(),
                             wigner_phase(w, -st.lambda()) * st.c_minus());
}

NoGlobalSU2Report no_global_su2_check(const ChartedMomentum& p, const ChartedMomentum& q) {
    const UnitVector3 ep = tangent_field(p).e;
    const UnitVector3 eq = tangent_field(q).e;
    const double c = std::max(-1.0, std::min(1.0, ep.dot(eq)));
    return {ep, eq, std::acos(c), describe_realization("p", ep), describe_realization("q", eq)};
}

} // namespace poincare
