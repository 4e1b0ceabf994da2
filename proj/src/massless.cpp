#include "poincare/massless.hpp"

#include <cmath>

namespace poincare {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double fold_two_pi(double phi) {
    double f = std::fmod(phi, kTwoPi);
    if (f < 0.0) f += kTwoPi;
    if (f >= kTwoPi) f = 0.0; // fmod can land on 2π after the shift rounds up
    return f;
}

} // namespace

LightlikeMomentum::LightlikeMomentum(double p0, double theta, double phi) {
    if (!std::isfinite(p0) || !std::isfinite(theta) || !std::isfinite(phi))
        throw InvariantViolation("LightlikeMomentum: non-finite parameters");
    if (p0 < 1e-12) throw InvariantViolation("LightlikeMomentum: p0 below 1e-12");
    if (theta < 0.0 || theta > M_PI)
        throw InvariantViolation("LightlikeMomentum: theta outside [0, pi]");
    p0_ = p0;
    theta_ = theta;
    phi_ = fold_two_pi(phi);
    const double s = std::sin(theta_);
    n1_ = s * std::cos(phi_);
    n2_ = s * std::sin(phi_);
    n3_ = std::cos(theta_);
}

LightlikeMomentum LightlikeMomentum::from_direction(double p0, double v1, double v2, double v3) {
    if (!std::isfinite(p0) || p0 < 1e-12)
        throw InvariantViolation("LightlikeMomentum: p0 below 1e-12");
    const double r = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
    if (!(r > 0.0) || !std::isfinite(r))
        throw InvariantViolation("LightlikeMomentum: zero or non-finite direction");
    LightlikeMomentum p;
    p.p0_ = p0;
    p.n1_ = v1 / r;
    p.n2_ = v2 / r;
    p.n3_ = v3 / r;
    const double rxy = std::hypot(p.n1_, p.n2_);
    p.theta_ = std::atan2(rxy, p.n3_);
    if (rxy == 0.0) {
        p.phi_ = 0.0; // canonical azimuth on the poles
    } else {
        double f = std::atan2(p.n2_, p.n1_);
        if (f < 0.0) f += kTwoPi;
        if (f >= kTwoPi) f = 0.0;
        p.phi_ = f;
    }
    p.mirrored_ = false;
    return p;
}

double LightlikeMomentum::theta() const { return mirrored_ ? M_PI - theta_ : theta_; }

double LightlikeMomentum::phi() const {
    if (!mirrored_) return phi_;
    return phi_ < M_PI ? phi_ + M_PI : phi_ - M_PI;
}

LightlikeMomentum LightlikeMomentum::tilde() const {
    LightlikeMomentum p;
    p.p0_ = p0_;
    p.theta_ = theta_;
    p.phi_ = phi_;
    p.mirrored_ = !mirrored_;
    p.n1_ = -n1_;
    p.n2_ = -n2_;
    p.n3_ = -n3_;
    return p;
}

bool LightlikeMomentum::operator==(const LightlikeMomentum& o) const {
    return p0_ == o.p0_ && theta_ == o.theta_ && phi_ == o.phi_ && mirrored_ == o.mirrored_ &&
           n1_ == o.n1_ && n2_ == o.n2_ && n3_ == o.n3_;
}

bool chart_admissible(const LightlikeMomentum& p, Chart chart) {
    const double margin = chart == Chart::N ? 1.0 + p.cos_theta() : 1.0 - p.cos_theta();
    return margin >= kChartMargin;
}

Chart default_chart(const LightlikeMomentum& p) {
    return p.cos_theta() >= 0.0 ? Chart::N : Chart::S;
}

ChartSet charts_of(const LightlikeMomentum& p) {
    return {chart_admissible(p, Chart::N), chart_admissible(p, Chart::S)};
}

ChartedMomentum::ChartedMomentum(const LightlikeMomentum& p, Chart chart) : p_(p), chart_(chart) {
    if (!chart_admissible(p, chart))
        throw ChartViolation(std::string("ChartedMomentum: chart ") + chart_name(chart) +
                             " refused (pole margin below 1e-12)");
}

LightlikeMomentum lightlike_transform(const LightlikeMomentum& p, const SL2CElement& a) {
    const Matrix2c h = a.matrix() * pauli_form(p.four_vector()) * a.matrix().adjoint();
    const FourVector q = four_vector_of(h, 1e-8);
    const double r = std::sqrt(q.p1 * q.p1 + q.p2 * q.p2 + q.p3 * q.p3);
    if (std::abs(q.p0 - r) > 1e-8 * std::max(q.p0, r))
        throw InvariantViolation("lightlike_transform: transformed momentum left the cone");
    return LightlikeMomentum::from_direction(r, q.p1, q.p2, q.p3);
}

SL2CElement coset_rep(const ChartedMomentum& cp) {
    const LightlikeMomentum& p = cp.momentum();
    const double half_log = 0.5 * std::log(p.p0());
    if (cp.chart() == Chart::N) {
        const Matrix2c rot = su2_a(p.theta(), p.phi()).matrix();
        const Matrix2c boost{std::exp(half_log), 0.0, 0.0, std::exp(-half_log)};
        return SL2CElement(rot * boost);
    }
    const Matrix2c rot = su2_a(p.theta() - M_PI, p.phi()).matrix();
    const Matrix2c boost{std::exp(-half_log), 0.0, 0.0, std::exp(half_log)};
    const Matrix2c isigma2{0.0, 1.0, -1.0, 0.0};
    return SL2CElement(rot * boost * isigma2);
}

SL2CElement coset_rep_alt(const ChartedMomentum& cp) {
    const LightlikeMomentum& p = cp.momentum();
    const FourVector pv = p.four_vector();
    if (cp.chart() == Chart::N) {
        const double scale = 1.0 / std::sqrt(2.0 * p.plus_component());
        return SL2CElement(scale * pauli_form(FourVector{1.0, 0.0, 0.0, -1.0} + pv));
    }
    const double scale = 1.0 / std::sqrt(2.0 * p.minus_component());
    return SL2CElement(scale * (pauli_form(FourVector{1.0, 0.0, 0.0, 1.0} - pv) * sigma1()));
}

E2Element overlap_element(const LightlikeMomentum& p) {
    if (charts_of(p).count() != 2)
        throw NotInOverlapError("overlap_element: momentum is not in the chart overlap");
    return E2Element(2.0 * (M_PI - p.phi()), cplx(0.0));
}

E2Element little_group_at(const ChartedMomentum& cp, const SL2CElement& a,
                          const ChartedMomentum& out, double tol) {
    const Matrix2c w =
        coset_rep(out).matrix().inverse() * a.matrix() * coset_rep(cp).matrix();
    return e2_recognize(SL2CElement(w), tol);
}

E2Element little_group(const ChartedMomentum& cp, const SL2CElement& a, Chart chart_out,
                       double tol) {
    const ChartedMomentum out(lightlike_transform(cp.momentum(), a), chart_out);
    return little_group_at(cp, a, out, tol);
}

cplx wigner_phase(const E2Element& h, long lambda) {
    return unit_ipow(h.diagonal(), 2 * lambda);
}

} // namespace poincare
