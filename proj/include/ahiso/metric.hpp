#pragma once

// Rotationally symmetric asymptotically hyperbolic metrics in two charts:
// the area-radius chart g = f(s)^-1 ds^2 + s^2 g_{S^2} and the arclength
// chart g = dr^2 + phi(r)^2 g_{S^2}.  Exact model metrics (hyperbolic space
// and Schwarzschild-AdS) are evaluated from closed forms; H-profile metrics
// are built from a prescribed mean-curvature profile on an arclength
// interval and matched to an exact Schwarzschild-AdS tail.

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "ahiso/errors.hpp"
#include "ahiso/numerics.hpp"

namespace ahiso {

enum class MetricKind { Hyperbolic, SchwarzschildAdS, HProfile };

/// Warp data at a fixed arclength coordinate r: phi(r), phi'(r), the mean
/// curvature H = 2 phi'/phi of the coordinate sphere, and dH/dr.
struct WarpData {
    double phi;
    double dphi;
    double H;
    double dH;
};

/// Mean-curvature profile r -> (H(r), H'(r)).
using HProfileFn = std::function<std::pair<double, double>(double)>;

namespace detail {

inline double f_exact(double mass, double s) { return 1.0 + s * s - 2.0 * mass / s; }
inline double df_exact(double mass, double s) { return 2.0 * s + 2.0 * mass / (s * s); }

// Hyperbolic space: f = 1 + s^2, no 2m/s term, valid down to s = 0.
inline double f_hyp(double s) { return 1.0 + s * s; }

} // namespace detail

struct RadialMetric {
    MetricKind kind = MetricKind::Hyperbolic;
    double mass = 0.0; // tail mass for HProfile

    // HProfile data (unused otherwise).
    double r0 = 0.0;
    double phi0 = 0.0;
    double match_r = 0.0;
    double s1 = 0.0; // phi(match_r)
    HProfileFn h_fn;

    // Arclength-chart trajectories.  For SchwarzschildAdS: state
    // {phi, volume} from r = 0 at the horizon.  For HProfile: interior
    // {log(phi/phi0), volume} on [r0, match_r] and tail {phi, volume}
    // beyond match_r.
    std::shared_ptr<OdeTrajectory> traj;
    std::shared_ptr<OdeTrajectory> tail;

    bool has_horizon() const { return kind != MetricKind::Hyperbolic; }

    /// Area radius of the horizon (0 for hyperbolic space, where the chart
    /// is based at the center instead).
    double horizon_radius() const {
        switch (kind) {
        case MetricKind::Hyperbolic: return 0.0;
        case MetricKind::SchwarzschildAdS: return 2.0 * mass;
        case MetricKind::HProfile: return phi0;
        }
        return 0.0;
    }

    double horizon_area() const {
        if (!has_horizon())
            throw DomainError("horizon_area: hyperbolic space has no horizon");
        const double sh = horizon_radius();
        return 4.0 * kPi * sh * sh;
    }

    void check_domain(double s) const {
        const double sh = horizon_radius();
        if (!(s >= sh * (1.0 - 1e-12)))
            throw DomainError("metric: area radius " + std::to_string(s) +
                              " below horizon radius " + std::to_string(sh));
    }

    /// The potential f(s) = s^2 H(s)^2 / 4; closed form for exact metrics.
    double potential(double s) const {
        check_domain(s);
        switch (kind) {
        case MetricKind::Hyperbolic: return detail::f_hyp(s);
        case MetricKind::SchwarzschildAdS: return detail::f_exact(mass, s);
        case MetricKind::HProfile: {
            if (s >= s1) return detail::f_exact(mass, s);
            const double H = h_fn(interior_r_of_s(s)).first;
            return 0.25 * s * s * H * H;
        }
        }
        return 0.0;
    }

    /// Native arclength coordinate of the sphere of area radius s.  The
    /// chart base is r = 0 for exact metrics and r = r0 for HProfile.
    double r_of_s(double s) const {
        check_domain(s);
        switch (kind) {
        case MetricKind::Hyperbolic: return std::asinh(s);
        case MetricKind::SchwarzschildAdS: {
            if (s == 2.0 * mass) return 0.0;
            auto integrand = [&](double sigma) {
                return 1.0 / std::sqrt(detail::f_exact(mass, sigma));
            };
            return integrate(integrand, 2.0 * mass, s).value;
        }
        case MetricKind::HProfile: {
            if (s <= phi0) return r0;
            if (s <= s1) return interior_r_of_s(s);
            auto integrand = [&](double sigma) {
                return 1.0 / std::sqrt(detail::f_exact(mass, sigma));
            };
            return match_r + integrate(integrand, s1, s).value;
        }
        }
        return 0.0;
    }

    double interior_r_of_s(double s) const {
        if (s <= phi0) return r0;
        const double target = std::log(s / phi0);
        const double end = traj->value(match_r, 0);
        if (target >= end) return match_r;
        Tolerances tol;
        tol.abs_tol = 1e-13;
        tol.rel_tol = 1e-13;
        return find_root([&](double r) { return traj->value(r, 0) - target; },
                         r0, match_r, tol);
    }
};

inline RadialMetric make_hyperbolic() {
    RadialMetric m;
    m.kind = MetricKind::Hyperbolic;
    m.mass = 0.0;
    return m;
}

inline RadialMetric make_schwarzschild_ads(double mass) {
    if (!(mass > 0.0))
        throw DomainError("make_schwarzschild_ads: mass must be positive");
    RadialMetric m;
    m.kind = MetricKind::SchwarzschildAdS;
    m.mass = mass;

    OdeRhs rhs = [mass](double, const OdeState& y, OdeState& dy) {
        const double phi = y[0];
        dy[0] = std::sqrt(std::max(detail::f_exact(mass, phi), 0.0));
        dy[1] = 4.0 * kPi * phi * phi;
    };
    Tolerances tol;
    tol.abs_tol = 1e-12;
    tol.rel_tol = 1e-12;
    tol.max_evals = 10'000'000;
    m.traj = std::make_shared<OdeTrajectory>(
        solve_ode(rhs, 0.0, OdeState{2.0 * mass, 0.0}, 60.0, tol));
    return m;
}

inline RadialMetric make_h_profile(double r0, double phi0, HProfileFn h_profile,
                                   double match_r, double tail_mass) {
    if (!(phi0 > 0.0))
        throw DomainError("make_h_profile: phi0 must be positive");
    if (!(match_r > r0))
        throw DomainError("make_h_profile: requires match_r > r0");
    if (!(tail_mass >= 0.0))
        throw DomainError("make_h_profile: tail mass must be nonnegative");

    const double h_at_r0 = h_profile(r0).first;
    if (std::fabs(h_at_r0 - 2.0) > 1e-8)
        throw ConstructionError("make_h_profile: horizon condition violated, H(r0)=" +
                                std::to_string(h_at_r0) + " != 2");
    // Smooth bumps of compact support underflow to exactly H = 2 near the
    // support endpoints, so the strict inequality is checked as "never
    // below 2, and strictly above 2 somewhere".
    const int n_grid = 400;
    double h_max = 2.0;
    for (int i = 1; i <= n_grid; ++i) {
        const double r = r0 + (match_r - r0) * i / n_grid;
        const double h_val = h_profile(r).first;
        if (h_val < 2.0 - 1e-12)
            throw ConstructionError(
                "make_h_profile: horizon condition violated, H < 2 at r=" +
                std::to_string(r));
        h_max = std::max(h_max, h_val);
    }
    if (!(h_max > 2.0 + 1e-10))
        throw ConstructionError(
            "make_h_profile: horizon condition violated, H never exceeds 2");

    RadialMetric m;
    m.kind = MetricKind::HProfile;
    m.mass = tail_mass;
    m.r0 = r0;
    m.phi0 = phi0;
    m.match_r = match_r;
    m.h_fn = std::move(h_profile);

    // Interior: integrate log(phi/phi0)' = H/2 alongside the enclosed volume.
    const HProfileFn& h = m.h_fn;
    OdeRhs rhs = [&h, phi0](double r, const OdeState& y, OdeState& dy) {
        dy[0] = 0.5 * h(r).first;
        dy[1] = 4.0 * kPi * phi0 * phi0 * std::exp(2.0 * y[0]);
    };
    Tolerances tol;
    tol.abs_tol = 1e-12;
    tol.rel_tol = 1e-12;
    tol.max_evals = 10'000'000;
    m.traj = std::make_shared<OdeTrajectory>(
        solve_ode(rhs, r0, OdeState{0.0, 0.0}, match_r, tol));

    m.s1 = phi0 * std::exp(m.traj->value(match_r, 0));
    const double h_interior = m.h_fn(match_r).first;
    const double f_tail = detail::f_exact(tail_mass, m.s1);
    if (!(f_tail > 0.0))
        throw ConstructionError("make_h_profile: matching failed, phi(match_r)=" +
                                std::to_string(m.s1) + " inside the tail horizon");
    const double h_tail = 2.0 * std::sqrt(f_tail) / m.s1;
    if (std::fabs(h_interior - h_tail) > 1e-8 * std::max(1.0, std::fabs(h_tail)))
        throw ConstructionError("make_h_profile: matching failed, H mismatch " +
                                std::to_string(h_interior - h_tail) + " at match_r");

    // Tail: continue phi' = sqrt(f_tail(phi)) past match_r.
    const double tm = tail_mass;
    OdeRhs tail_rhs = [tm](double, const OdeState& y, OdeState& dy) {
        const double phi = y[0];
        dy[0] = std::sqrt(std::max(detail::f_exact(tm, phi), 0.0));
        dy[1] = 4.0 * kPi * phi * phi;
    };
    const double interior_vol = m.traj->value(match_r, 1);
    m.tail = std::make_shared<OdeTrajectory>(solve_ode(
        tail_rhs, match_r, OdeState{m.s1, interior_vol}, match_r + 60.0, tol));
    return m;
}

/// Warp data at the native arclength coordinate r (base r = 0 for exact
/// metrics, r = r0 for HProfile).  For hyperbolic space r = 0 is the
/// center, where H diverges.
inline WarpData warp(const RadialMetric& m, double r) {
    auto exact_warp = [&](double phi, double mass_term) {
        const double mass = mass_term;
        const double f = (m.kind == MetricKind::Hyperbolic)
                             ? detail::f_hyp(phi)
                             : detail::f_exact(mass, phi);
        const double df = (m.kind == MetricKind::Hyperbolic)
                              ? 2.0 * phi
                              : detail::df_exact(mass, phi);
        const double dphi = std::sqrt(std::max(f, 0.0));
        return WarpData{phi, dphi, 2.0 * dphi / phi,
                        df / phi - 2.0 * f / (phi * phi)};
    };
    switch (m.kind) {
    case MetricKind::Hyperbolic: {
        if (r < 0.0)
            throw DomainError("warp: negative arclength in hyperbolic space");
        return exact_warp(std::sinh(r), 0.0);
    }
    case MetricKind::SchwarzschildAdS: {
        if (r < 0.0 || r > m.traj->t_back())
            throw DomainError("warp: arclength out of chart range");
        return exact_warp(m.traj->value(r, 0), m.mass);
    }
    case MetricKind::HProfile: {
        if (r < m.r0 || r > m.tail->t_back())
            throw DomainError("warp: arclength out of chart range");
        if (r <= m.match_r) {
            const double phi = m.phi0 * std::exp(m.traj->value(r, 0));
            auto [H, dH] = m.h_fn(r);
            return WarpData{phi, 0.5 * H * phi, H, dH};
        }
        return exact_warp(m.tail->value(r, 0), m.mass);
    }
    }
    throw DomainError("warp: unknown metric kind");
}

/// Scalar curvature at area radius s, from closed forms (no numerical
/// differentiation): R = -2f'/s + 2(1-f)/s^2 on exact regions and
/// R = -2H' - (3/2)H^2 + 2/phi^2 on the profiled region.
inline double scalar_curvature(const RadialMetric& m, double s) {
    m.check_domain(s);
    if (m.kind == MetricKind::HProfile && s < m.s1) {
        const double r = m.interior_r_of_s(s);
        auto [H, dH] = m.h_fn(r);
        return -2.0 * dH - 1.5 * H * H + 2.0 / (s * s);
    }
    const double f = (m.kind == MetricKind::Hyperbolic) ? detail::f_hyp(s)
                                                        : detail::f_exact(m.mass, s);
    const double df = (m.kind == MetricKind::Hyperbolic)
                          ? 2.0 * s
                          : detail::df_exact(m.mass, s);
    return -2.0 * df / s + 2.0 * (1.0 - f) / (s * s);
}

/// Scalar curvature at the native arclength coordinate r (avoids the
/// s -> r inversion when scanning profiled regions).
inline double scalar_curvature_at_r(const RadialMetric& m, double r) {
    if (m.kind == MetricKind::HProfile && r >= m.r0 && r <= m.match_r) {
        const double phi = m.phi0 * std::exp(m.traj->value(r, 0));
        auto [H, dH] = m.h_fn(r);
        return -2.0 * dH - 1.5 * H * H + 2.0 / (phi * phi);
    }
    return scalar_curvature(m, warp(m, r).phi);
}

/// Radial Ricci eigenvalue Ric(nu, nu) = -2 phi''/phi, with
/// phi''/phi = H'/2 + H^2/4; equals -f'(s)/s on exact regions.
inline double ricci_normal(const RadialMetric& m, double s) {
    m.check_domain(s);
    if (m.kind == MetricKind::HProfile && s < m.s1) {
        const double r = m.interior_r_of_s(s);
        auto [H, dH] = m.h_fn(r);
        return -dH - 0.5 * H * H;
    }
    const double df = (m.kind == MetricKind::Hyperbolic)
                          ? 2.0 * s
                          : detail::df_exact(m.mass, s);
    return -df / s;
}

/// Arclength from the horizon (from the center for hyperbolic space) to
/// the sphere of area radius s.
inline double arclength(const RadialMetric& m, double s) {
    return m.r_of_s(s) - (m.kind == MetricKind::HProfile ? m.r0 : 0.0);
}

/// Mean-curvature profile (H, H') of the exact Schwarzschild-AdS metric of
/// the given mass, as a function of its native arclength coordinate
/// (r = 0 at the horizon).  Useful for building HProfile metrics that
/// reproduce the exact metric.
inline HProfileFn exact_mean_curvature_profile(double mass) {
    auto ref = std::make_shared<RadialMetric>(make_schwarzschild_ads(mass));
    return [ref](double r) {
        const WarpData w = warp(*ref, r);
        return std::make_pair(w.H, w.dH);
    };
}

} // namespace ahiso
