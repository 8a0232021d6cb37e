#pragma once

// Inverse mean curvature flow of centered spheres: the exact area law
// area(t) = e^t area(0), Hawking-mass monotonicity auditing, the
// swept-volume lower bound with its equality case on the exact metrics,
// jump-accounting bounds, and the uniform error integral.

#include <cmath>
#include <vector>

#include "ahiso/errors.hpp"
#include "ahiso/metric.hpp"
#include "ahiso/numerics.hpp"
#include "ahiso/quantities.hpp"

namespace ahiso {

struct FlowSample {
    double t = 0.0;
    double area = 0.0;
    double s = 0.0;
    double mean_curvature = 0.0;
    double hawking_mass = 0.0;
    double swept_volume = 0.0;
    double lower_bound = 0.0;
};

/// Lower bound for the volume swept by the sphere flow up to time tau,
/// starting from area0, for a flow whose Hawking mass stays >= m:
///   Int_0^tau e^{3t/2} A^{3/2} (4 e^t A + 16 pi
///                               - e^{-t/2} A^{-1/2} (16 pi)^{3/2} m)^{-1/2} dt.
inline double swept_volume_lower_bound(double area0, double m, double tau) {
    if (!(area0 > 0.0))
        throw DomainError("swept_volume_lower_bound: area must be positive");
    if (!(tau >= 0.0))
        throw DomainError("swept_volume_lower_bound: negative flow time");
    if (tau == 0.0) return 0.0;
    const double a32 = std::pow(area0, 1.5);
    auto bracket = [&](double t) {
        return 4.0 * std::exp(t) * area0 + 16.0 * kPi -
               std::exp(-0.5 * t) / std::sqrt(area0) *
                   std::pow(16.0 * kPi, 1.5) * m;
    };
    // The bracket is increasing in t, so positivity at t = 0 suffices; it
    // can only fail for a large mass relative to the initial area.
    if (!(bracket(0.0) > 0.0))
        throw DomainError("swept_volume_lower_bound: integrand nonpositive at t=0");
    auto integrand = [&](double t) {
        return std::exp(1.5 * t) * a32 / std::sqrt(bracket(t));
    };
    return integrate(integrand, 0.0, tau).value;
}

/// Flow the centered sphere of initial area area0 for time t_max, sampling
/// n+1 uniformly spaced times.  The running lower bound feeds the smallest
/// Hawking mass seen so far into the swept-volume estimate, so it stays a
/// genuine lower bound even when monotonicity fails.
inline std::vector<FlowSample> flow_spheres(const RadialMetric& metric,
                                            double area0, double t_max, int n) {
    if (metric.has_horizon() && !(area0 >= metric.horizon_area() * (1.0 - 1e-12)))
        throw DomainError("flow_spheres: initial area below the horizon area");
    if (!(area0 > 0.0))
        throw DomainError("flow_spheres: initial area must be positive");
    if (!(t_max > 0.0) || n < 2)
        throw DomainError("flow_spheres: requires t_max > 0 and n >= 2");

    const double s0 = std::sqrt(area0 / (4.0 * kPi));
    const double vol0 = ball_volume(metric, s0);
    std::vector<FlowSample> out;
    out.reserve(n + 1);
    double m_low = sphere_geometry(metric, s0).hawking_mass;
    for (int i = 0; i <= n; ++i) {
        const double t = t_max * i / n;
        FlowSample f;
        f.t = t;
        f.area = std::exp(t) * area0;
        f.s = std::sqrt(f.area / (4.0 * kPi));
        const SphereGeom g = sphere_geometry(metric, f.s);
        f.mean_curvature = g.mean_curvature;
        f.hawking_mass = g.hawking_mass;
        m_low = std::min(m_low, g.hawking_mass);
        f.swept_volume = (i == 0) ? 0.0 : ball_volume(metric, f.s) - vol0;
        f.lower_bound = (i == 0) ? 0.0 : swept_volume_lower_bound(area0, m_low, t);
        out.push_back(f);
    }
    return out;
}

struct GerochAudit {
    double min_increment = 0.0;
    bool monotone = true;
};

/// Smallest consecutive Hawking-mass increment along a flow; the flow is
/// reported monotone when no decrease exceeds the quadrature noise floor.
inline GerochAudit geroch_audit(const std::vector<FlowSample>& samples,
                                double tol = 1e-8) {
    if (samples.size() < 2)
        throw InsufficientData("geroch_audit: needs at least two samples");
    GerochAudit audit;
    audit.min_increment = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].t > samples[i - 1].t))
            throw DomainError("geroch_audit: samples must have increasing t");
        audit.min_increment = std::min(
            audit.min_increment,
            samples[i].hawking_mass - samples[i - 1].hawking_mass);
    }
    audit.monotone = audit.min_increment >= -tol;
    return audit;
}

/// Upper bound on the flow-time length beta of a jump of boundary area
/// area_jump occurring at time T, for a flow started from boundary area
/// area_omega >= 1: beta <= log(1 + (area_jump / area_omega) e^{-T}).
inline double jump_growth_bound(double area_omega, double area_jump, double T) {
    if (!(area_omega >= 1.0))
        throw DomainError("jump_growth_bound: requires initial area >= 1");
    if (!(area_jump >= 0.0) || !(T >= 0.0))
        throw DomainError("jump_growth_bound: negative jump area or time");
    return std::log1p(area_jump / area_omega * std::exp(-T));
}

/// Uniform bound on the extra swept volume attributable to one jump of the
/// given boundary area: half the jump area.
inline double jump_volume_excess(double area_jump) {
    if (!(area_jump >= 0.0))
        throw DomainError("jump_volume_excess: negative jump area");
    return 0.5 * area_jump;
}

/// The uniform error integral
///   Int_0^inf e^{3t/2} A^{3/2} [(4 e^t A + 16 pi)^{-1/2}
///              - (4 e^t A + 16 pi (1 + e^{-t/2}/3))^{-1/2}] dt,
/// evaluated with the bracketed difference rationalized; increases
/// monotonically in A toward the limit 2 pi / 3.
inline double coarse_error_integral(double area) {
    if (!(area > 0.0))
        throw DomainError("coarse_error_integral: area must be positive");
    const double a32 = std::pow(area, 1.5);
    // e^{3t/2} is factored out of the bracket so nothing overflows at
    // large t: x = e^t x_tilde, sqrt(x y)(sqrt x + sqrt y) = e^{3t/2} (...).
    auto integrand = [&](double t) {
        const double xt = 4.0 * area + 16.0 * kPi * std::exp(-t);
        const double gap = (16.0 * kPi / 3.0) * std::exp(-0.5 * t);
        const double yt = xt + gap * std::exp(-t);
        const double sx = std::sqrt(xt), sy = std::sqrt(yt);
        return a32 * gap / (sx * sy * (sx + sy));
    };
    return integrate_to_infinity(integrand, 0.0).value;
}

} // namespace ahiso
