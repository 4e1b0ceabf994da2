#include "poincare/massive.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace poincare {

MassiveMomentum::MassiveMomentum(double mass, double p1, double p2, double p3)
    : m_(mass), p1_(p1), p2_(p2), p3_(p3) {
    if (!std::isfinite(mass) || !std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(p3))
        throw InvariantViolation("MassiveMomentum: non-finite components");
    if (mass < 1e-10) throw InvariantViolation("MassiveMomentum: mass below 1e-10");
}

double MassiveMomentum::energy() const {
    return std::sqrt(m_ * m_ + p1_ * p1_ + p2_ * p2_ + p3_ * p3_);
}

FourVector MassiveMomentum::four_vector() const { return {energy(), p1_, p2_, p3_}; }

SpinState::SpinState(int twice_s, const MassiveMomentum& p, std::vector<cplx> amplitudes, int eta)
    : twice_s_(twice_s), p_(p), amps_(std::move(amplitudes)), eta_(eta) {
    if (twice_s_ < 0) throw InvariantViolation("SpinState: negative spin");
    if (eta_ != 1 && eta_ != -1) throw InvariantViolation("SpinState: eta must be +1 or -1");
    if (amps_.size() != static_cast<size_t>(twice_s_ + 1))
        throw InvariantViolation("SpinState: amplitude count differs from 2s+1");
    if (std::abs(norm_squared() - 1.0) > kConstructorTol)
        throw InvariantViolation("SpinState: amplitudes not unit norm");
}

double SpinState::norm_squared() const {
    double n = 0.0;
    for (const cplx& c : amps_) n += std::norm(c);
    return n;
}

SL2CElement boost_massive(const MassiveMomentum& p) {
    const double m = p.mass();
    const double e = p.energy();
    const double scale = 1.0 / std::sqrt(2.0 * m * (m + e));
    const Matrix2c num = pauli_form(FourVector{e + m, p.p1(), p.p2(), p.p3()});
    return SL2CElement(scale * num);
}

namespace {

// Λ(A)p for a timelike momentum, keeping the mass label: the spatial part is
// read off the conjugated Pauli form and the energy is rederived from the
// shell condition. The conjugated energy is checked against it.
MassiveMomentum transform_massive(const MassiveMomentum& p, const SL2CElement& a) {
    const Matrix2c h = a.matrix() * pauli_form(p.four_vector()) * a.matrix().adjoint();
    const FourVector q = four_vector_of(h, 1e-8);
    MassiveMomentum out(p.mass(), q.p1, q.p2, q.p3);
    if (std::abs(out.energy() - q.p0) > 1e-8 * q.p0)
        throw InvariantViolation("transform_massive: transformed momentum off the mass shell");
    return out;
}

} // namespace

SU2Element wigner_rotation_massive(const MassiveMomentum& p, const SL2CElement& a) {
    const MassiveMomentum q = transform_massive(p, a);
    const Matrix2c w = boost_massive(q).matrix().inverse() * a.matrix() * boost_massive(p).matrix();
    return SU2Element(w, 1e-10);
}

DMatrix wigner_D(const SU2Element& a, int twice_s) {
    if (twice_s < 0 || twice_s > 20)
        throw UnsupportedSpinError("wigner_D: spin must satisfy 0 <= s <= 10");
    const int dim = twice_s + 1;

    // Axis-angle extraction from the quaternion components
    // a = w·1 + i(x σ1 + y σ2 + z σ3).
    const Matrix2c& m = a.matrix();
    const double w = 0.5 * (m.a.real() + m.d.real());
    const double x = 0.5 * (m.b.imag() + m.c.imag());
    const double y = 0.5 * (m.b.real() - m.c.real());
    const double z = 0.5 * (m.a.imag() - m.d.imag());
    const double vecnorm = std::sqrt(x * x + y * y + z * z);
    const double omega = 2.0 * std::atan2(vecnorm, w); // in [0, 2π]
    double n1 = 0.0, n2 = 0.0, n3 = 1.0;
    if (vecnorm > 0.0) {
        n1 = x / vecnorm;
        n2 = y / vecnorm;
        n3 = z / vecnorm;
    }

    if (dim == 1) return DMatrix{1, {cplx(1.0, 0.0)}};

    // Ladder construction: J+ has entries sqrt(s(s+1) - m(m+1)) one above
    // the diagonal in the descending s3 basis.
    const double s = 0.5 * twice_s;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double mi = s - i;
        h(i, i) += omega * n3 * mi; // J3 part
        if (i > 0) {
            const double cp = std::sqrt(s * (s + 1.0) - mi * (mi + 1.0));
            // J1 = (J+ + J-)/2, J2 = (J+ - J-)/(2i)
            h(i - 1, i) += omega * 0.5 * cp * cplx(n1, -n2);
            h(i, i - 1) += omega * 0.5 * cp * cplx(n1, n2);
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXd ev = es.eigenvalues();
    Eigen::VectorXcd phases(dim);
    for (int i = 0; i < dim; ++i) phases(i) = std::polar(1.0, ev(i));
    const Eigen::MatrixXcd d =
        es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();

    DMatrix out;
    out.dim = dim;
    out.m.resize(static_cast<size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) out.m[static_cast<size_t>(r) * dim + c] = d(r, c);
    return out;
}

DMatrix dmatrix_multiply(const DMatrix& x, const DMatrix& y) {
    DMatrix r;
    r.dim = x.dim;
    r.m.assign(static_cast<size_t>(x.dim) * x.dim, cplx(0.0));
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            const cplx xv = x.at(i, k);
            for (int j = 0; j < x.dim; ++j) r.m[static_cast<size_t>(i) * x.dim + j] += xv * y.at(k, j);
        }
    return r;
}

double dmatrix_distance_inf(const DMatrix& x, const DMatrix& y) {
    double m = 0.0;
    for (size_t i = 0; i < x.m.size(); ++i) m = std::max(m, std::abs(x.m[i] - y.m[i]));
    return m;
}

double dmatrix_unitarity_residual(const DMatrix& x) {
    double m = 0.0;
    for (int i = 0; i < x.dim; ++i)
        for (int j = 0; j < x.dim; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < x.dim; ++k) s += std::conj(x.at(k, i)) * x.at(k, j);
            m = std::max(m, std::abs(s - (i == j ? cplx(1.0) : cplx(0.0))));
        }
    return m;
}

SpinState transport_massive(const SpinState& state, const SL2CElement& a) {
    const MassiveMomentum q = transform_massive(state.momentum(), a);
    const SU2Element rot = wigner_rotation_massive(state.momentum(), a);
    const DMatrix d = wigner_D(rot, state.twice_s());
    const std::vector<cplx>& in = state.amplitudes();
    std::vector<cplx> out(in.size(), cplx(0.0));
    for (int r = 0; r < d.dim; ++r)
        for (int c = 0; c < d.dim; ++c) out[r] += d.at(r, c) * in[c];
    // Renormalization is deliberately not applied; the constructor's norm
    // check doubles as the unitarity guarantee.
    return SpinState(state.twice_s(), q, std::move(out), state.eta());
}

SpinState parity_massive(const SpinState& state) {
    std::vector<cplx> amps = state.amplitudes();
    if (state.eta() == -1)
        for (cplx& c : amps) c = -c;
    return SpinState(state.twice_s(), state.momentum().tilde(), std::move(amps), state.eta());
}

} // namespace poincare
