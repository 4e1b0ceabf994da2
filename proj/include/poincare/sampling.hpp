#ifndef POINCARE_SAMPLING_HPP
#define POINCARE_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "poincare/massive.hpp"
#include "poincare/massless.hpp"
#include "poincare/polarization.hpp"

namespace poincare {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std:: distributions so
/// that a seed pins the byte stream on every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Split off an independent stream (used to keep checks decoupled from
    /// one another's draw counts).
    SplitMix64 split() { return SplitMix64(next()); }

    /// Uniform in [0,1) with 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Standard normal via Box-Muller (both draws consumed every call).
    double gaussian() {
        double u = u01();
        while (u == 0.0) u = u01();
        const double v = u01();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
    }

private:
    std::uint64_t state_;
};

namespace sample {

inline UnitVector3 unit_vector(SplitMix64& rng) {
    const double z = rng.uniform(-1.0, 1.0);
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return UnitVector3(s * std::cos(phi), s * std::sin(phi), z, 1e-9);
}

inline cplx complex_box(SplitMix64& rng, double half_width) {
    return {rng.uniform(-half_width, half_width), rng.uniform(-half_width, half_width)};
}

/// exp of a random complex traceless matrix with entries uniform in the
/// unit box; keeps the conditioning of downstream products bounded.
inline SL2CElement sl2c(SplitMix64& rng) {
    const cplx m11 = complex_box(rng, 1.0);
    const Matrix2c m{m11, complex_box(rng, 1.0), complex_box(rng, 1.0), -m11};
    return SL2CElement(exp_traceless(m));
}

/// Haar-ish SU(2) via a normalized quaternion of gaussians.
inline SU2Element su2(SplitMix64& rng) {
    double q[4];
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& x : q) {
            x = rng.gaussian();
            norm2 += x * x;
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    const double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;
    return SU2Element(Matrix2c{cplx(w, z), cplx(y, x), cplx(-y, x), cplx(w, -z)}, 1e-10);
}

/// Energy log-uniform over [1e-3, 1e3], direction uniform on the sphere,
/// optionally kept away from the poles.
inline LightlikeMomentum lightlike(SplitMix64& rng, double pole_margin = 0.0) {
    const double p0 = rng.log_uniform(1e-3, 1e3);
    for (;;) {
        const UnitVector3 n = unit_vector(rng);
        if (1.0 - std::abs(n.n3()) >= pole_margin)
            return LightlikeMomentum::from_direction(p0, n.n1(), n.n2(), n.n3());
    }
}

inline ChartedMomentum charted(SplitMix64& rng, double pole_margin = 0.0) {
    const LightlikeMomentum p = lightlike(rng, pole_margin);
    const ChartSet cs = charts_of(p);
    if (cs.count() == 2) return {p, rng.u01() < 0.5 ? Chart::N : Chart::S};
    return {p, cs.has_n ? Chart::N : Chart::S};
}

/// Mass log-uniform over [1e-1, 1e1], rapidity uniform up to 6.
inline MassiveMomentum massive(SplitMix64& rng) {
    const double m = rng.log_uniform(1e-1, 1e1);
    const double v = rng.uniform(0.0, 6.0);
    const UnitVector3 n = unit_vector(rng);
    const double mom = m * std::sinh(v);
    return {m, mom * n.n1(), mom * n.n2(), mom * n.n3()};
}

inline std::vector<cplx> unit_amplitudes(SplitMix64& rng, int count) {
    std::vector<cplx> a(count);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (cplx& c : a) {
            c = complex_box(rng, 1.0);
            norm2 += std::norm(c);
        }
    } while (norm2 < 1e-6);
    const double inv = 1.0 / std::sqrt(norm2);
    for (cplx& c : a) c *= inv;
    return a;
}

inline PolarizationState polarization_state(SplitMix64& rng, int lambda = 1,
                                            double pole_margin = 0.0) {
    const ChartedMomentum cp = charted(rng, pole_margin);
    const std::vector<cplx> a = unit_amplitudes(rng, 2);
    return {cp, lambda, a[0], a[1]};
}

inline SpinState spin_state(SplitMix64& rng, int twice_s) {
    const MassiveMomentum p = massive(rng);
    std::vector<cplx> a = unit_amplitudes(rng, twice_s + 1);
    const int eta = rng.u01() < 0.5 ? 1 : -1;
    return {twice_s, p, std::move(a), eta};
}

inline E2Element e2_element(SplitMix64& rng) {
    return {rng.uniform(0.0, 4.0 * M_PI), complex_box(rng, 2.0)};
}

} // namespace sample
} // namespace poincare

#endif
