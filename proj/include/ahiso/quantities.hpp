#pragma once

// Scalar geometric functionals over radial metrics: sphere geometry and
// Hawking mass, ball volumes, renormalized volume and its mass derivative,
// the Christodoulou-Yau inequalities, and the stable-CMC mean-curvature
// bound.

#include <cmath>

#include "ahiso/errors.hpp"
#include "ahiso/metric.hpp"
#include "ahiso/numerics.hpp"

namespace ahiso {

/// Geometry of the centered coordinate sphere of area radius s.  Coordinate
/// spheres in a warped product are umbilic, so the traceless second
/// fundamental form vanishes identically.
struct SphereGeom {
    double s = 0.0;
    double area = 0.0;
    double mean_curvature = 0.0;
    double hawking_mass = 0.0;
    double scalar_curvature = 0.0;
    double traceless_sff_norm_sq = 0.0;
};

namespace detail {

// H^2 - 4 without cancellation: on exact regions 4f/s^2 - 4 loses all
// precision at large s, while the equivalent 4(1 - 2m/s)/s^2 does not.
inline double h_sq_minus_4(const RadialMetric& m, double s) {
    switch (m.kind) {
    case MetricKind::Hyperbolic: return 4.0 / (s * s);
    case MetricKind::SchwarzschildAdS: return 4.0 * (1.0 - 2.0 * m.mass / s) / (s * s);
    case MetricKind::HProfile: {
        if (s >= m.s1) return 4.0 * (1.0 - 2.0 * m.mass / s) / (s * s);
        const double H = m.h_fn(m.interior_r_of_s(s)).first;
        return (H - 2.0) * (H + 2.0);
    }
    }
    return 0.0;
}

} // namespace detail

inline SphereGeom sphere_geometry(const RadialMetric& m, double s) {
    m.check_domain(s);
    SphereGeom g;
    g.s = s;
    g.area = 4.0 * kPi * s * s;
    const double h2m4 = detail::h_sq_minus_4(m, s);
    g.mean_curvature = std::sqrt(4.0 + h2m4);
    const double deficit = 16.0 * kPi - g.area * h2m4;
    g.hawking_mass = std::sqrt(g.area) / std::pow(16.0 * kPi, 1.5) * deficit;
    g.scalar_curvature = scalar_curvature(m, s);
    g.traceless_sff_norm_sq = 0.0;
    return g;
}

/// Volume of the region between the horizon (or center) and the coordinate
/// sphere of area radius s.
inline double ball_volume(const RadialMetric& m, double s) {
    m.check_domain(s);
    switch (m.kind) {
    case MetricKind::Hyperbolic:
        return 2.0 * kPi * (s * std::sqrt(1.0 + s * s) - std::asinh(s));
    case MetricKind::SchwarzschildAdS: {
        if (s == 2.0 * m.mass) return 0.0;
        auto density = [&](double sigma) {
            return 4.0 * kPi * sigma * sigma /
                   std::sqrt(detail::f_exact(m.mass, sigma));
        };
        return integrate(density, 2.0 * m.mass, s).value;
    }
    case MetricKind::HProfile: {
        if (s <= m.s1)
            return m.traj->value(m.interior_r_of_s(s), 1);
        auto density = [&](double sigma) {
            return 4.0 * kPi * sigma * sigma /
                   std::sqrt(detail::f_exact(m.mass, sigma));
        };
        return m.traj->value(m.match_r, 1) + integrate(density, m.s1, s).value;
    }
    }
    return 0.0;
}

/// Closed-form volume of the hyperbolic ball whose boundary has the given
/// area: 2 pi R^2 sqrt(1 + R^-2) - 2 pi asinh(R) with R = sqrt(area/4pi).
inline double hyperbolic_ball_volume_exact(double area) {
    if (!(area > 0.0))
        throw DomainError("hyperbolic_ball_volume_exact: area must be positive");
    const double R = std::sqrt(area / (4.0 * kPi));
    return 2.0 * kPi * (R * std::sqrt(1.0 + R * R) - std::asinh(R));
}

/// Renormalized volume: limit of (metric ball volume) - (hyperbolic ball
/// volume) over the exhaustion by coordinate spheres, computed as a single
/// convergent integral of the density difference.
inline double renormalized_volume(const RadialMetric& m) {
    switch (m.kind) {
    case MetricKind::Hyperbolic:
        return 0.0;
    case MetricKind::SchwarzschildAdS: {
        const double mass = m.mass;
        // s^2 (f_m^-1/2 - f_0^-1/2) rationalized via f_0 - f_m = 2m/s.
        auto diff = [mass](double s) {
            const double fm = detail::f_exact(mass, s);
            const double f0 = detail::f_hyp(s);
            return 2.0 * mass * s /
                   (std::sqrt(fm * f0) * (std::sqrt(fm) + std::sqrt(f0)));
        };
        const double tail = 4.0 * kPi * integrate_to_infinity(diff, 2.0 * mass).value;
        return tail - hyperbolic_ball_volume_exact(16.0 * kPi * mass * mass);
    }
    case MetricKind::HProfile: {
        // Perturbed region in the arclength chart: the hyperbolic density is
        // pulled back through sigma = phi(r), d sigma = phi'(r) dr, so the
        // difference integrand is 4 pi phi^2 (1 - phi'/sqrt(1 + phi^2)).
        auto interior_diff = [&](double r) {
            const WarpData w = warp(m, r);
            return 4.0 * kPi * w.phi * w.phi *
                   (1.0 - w.dphi / std::sqrt(1.0 + w.phi * w.phi));
        };
        Tolerances tol;
        tol.abs_tol = 1e-9;
        tol.rel_tol = 1e-10;
        const double interior =
            integrate(interior_diff, m.r0, m.match_r, tol).value;
        const double mass = m.mass;
        auto diff = [mass](double s) {
            const double fm = detail::f_exact(mass, s);
            const double f0 = detail::f_hyp(s);
            return 2.0 * mass * s /
                   (std::sqrt(fm * f0) * (std::sqrt(fm) + std::sqrt(f0)));
        };
        const double tail = 4.0 * kPi * integrate_to_infinity(diff, m.s1).value;
        // Hyperbolic volume inside sigma < s1 not covered by the pullback:
        // the head below sigma = phi0, plus the exact-tail stretch handled
        // by the rationalized difference; subtract the hyperbolic head.
        const double head = hyperbolic_ball_volume_exact(4.0 * kPi * m.phi0 * m.phi0);
        return interior + tail - head;
    }
    }
    return 0.0;
}

/// d/dm of the renormalized volume of Schwarzschild-AdS:
/// -16 pi m + 4 pi Int_{2m}^inf s f(s)^{-3/2} ds.
inline double renormalized_volume_derivative(double mass) {
    if (!(mass > 0.0))
        throw DomainError("renormalized_volume_derivative: mass must be positive");
    auto integrand = [mass](double s) {
        return s * std::pow(detail::f_exact(mass, s), -1.5);
    };
    return -16.0 * kPi * mass +
           4.0 * kPi * integrate_to_infinity(integrand, 2.0 * mass).value;
}

/// Renormalized volume plus half the horizon area; nonnegative whenever
/// the scalar curvature is at least -6.
inline double penrose_margin(const RadialMetric& m) {
    if (!m.has_horizon())
        throw DomainError("penrose_margin: metric has no horizon");
    return renormalized_volume(m) + 0.5 * m.horizon_area();
}

/// The Christodoulou-Yau integrands on a coordinate sphere, in the form of
/// the three inequalities: lhs <= rhs_genus0 (genus 0), lhs <= rhs_general,
/// and combined_lhs <= 64 pi / 3.
struct ChristodoulouYau {
    double lhs = 0.0;          // area * (R + 6), since |Å|^2 = 0
    double rhs_genus0 = 0.0;   // (3/2) area^{-1/2} (16 pi)^{3/2} m_H
    double rhs_general = 0.0;  // rhs_genus0 + 8 pi
    double combined_lhs = 0.0; // (2/3) lhs + area (H^2 - 4)
};

inline ChristodoulouYau christodoulou_yau(const RadialMetric& m, double s) {
    const SphereGeom g = sphere_geometry(m, s);
    ChristodoulouYau cy;
    cy.lhs = g.area * (g.scalar_curvature + 6.0);
    cy.rhs_genus0 =
        1.5 / std::sqrt(g.area) * std::pow(16.0 * kPi, 1.5) * g.hawking_mass;
    cy.rhs_general = cy.rhs_genus0 + 8.0 * kPi;
    cy.combined_lhs =
        (2.0 / 3.0) * cy.lhs + g.area * detail::h_sq_minus_4(m, s);
    return cy;
}

/// Upper bound for H^2 of a volume-preserving stable CMC sphere:
/// max(-2 Ric(nu, nu), 64 pi / (3 area) + 4).
inline double stable_cmc_H_bound(const RadialMetric& m, double s) {
    m.check_domain(s);
    const double area = 4.0 * kPi * s * s;
    return std::max(-2.0 * ricci_normal(m, s), 64.0 * kPi / (3.0 * area) + 4.0);
}

} // namespace ahiso
