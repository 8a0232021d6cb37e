#pragma once

// Compactly perturbed Schwarzschild-AdS metrics with scalar curvature
// dropping below -6 somewhere, for which large centered coordinate balls
// are beaten by the generalized competitor.

#include <cmath>
#include <memory>
#include <utility>
#include <vector>

#include "ahiso/errors.hpp"
#include "ahiso/isoprofile.hpp"
#include "ahiso/metric.hpp"
#include "ahiso/numerics.hpp"
#include "ahiso/quantities.hpp"

namespace ahiso {

struct CounterexampleParams {
    double r0 = 10.0;
    double eps = 0.1;           // phi(r0); horizon area 4*pi*eps^2
    double mass = 1.0;          // exact tail mass
    double s1 = std::sinh(11.0);  // target area-radius at r0 + 1
    double bump_width = 0.4;
};

struct CounterexampleReport {
    double min_scalar_curvature = 0.0;
    double renorm_vol = 0.0;
    double horizon_area = 0.0;
    double penrose_margin = 0.0;
    std::vector<ProfileSample> profile_samples;
    bool verdict_R_violated = false;
    bool verdict_margin_negative = false;
    bool verdict_balls_lose = false;
};

namespace detail {

// Mollifier bump on [0,1], value and derivative.  Underflows to exactly
// zero near the endpoints, which is why the H > 2 grid check in
// make_h_profile tolerates touching 2 from above.
inline std::pair<double, double> mollifier(double u) {
    if (!(u > 0.0) || !(u < 1.0)) return {0.0, 0.0};
    const double p = u * (1.0 - u);
    const double b = std::exp(-1.0 / p);
    return {b, b * (1.0 - 2.0 * u) / (p * p)};
}

// Quintic smoothstep on [0,1].
inline std::pair<double, double> smoothstep(double x) {
    if (x <= 0.0) return {0.0, 0.0};
    if (x >= 1.0) return {1.0, 0.0};
    const double w = x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
    const double dw = 30.0 * x * x * (1.0 - x) * (1.0 - x);
    return {w, dw};
}

}  // namespace detail

// Builds the perturbed metric: H(r) = (1-w)(2 + a*b(r)) + w*H_tail(phi(r))
// on [r0, r0+1], exact mass tail beyond.  The bump b lives on
// [r0, r0+bump_width], the transition w on [r0+1/2, r0+1], and the
// amplitude a is solved so that phi(r0+1) = s1.
inline RadialMetric construct(const CounterexampleParams& params) {
    const double r0 = params.r0;
    const double eps = params.eps;
    const double mass = params.mass;
    const double s1 = params.s1;
    const double bw = params.bump_width;
    if (!(r0 > 0.0) || !(eps > 0.0) || !(mass > 0.0) || !(bw > 0.0) ||
        !(bw <= 0.5))
        throw ConstructionError("construct: invalid parameters");
    if (!(s1 > 2.0 * mass))
        throw ConstructionError("construct: s1 must exceed the horizon radius");
    if (!(eps * std::exp(1.0) <= s1))
        throw ConstructionError(
            "construct: infeasible parameters, need eps*e <= s1");

    // Tail mean curvature along area radius phi; f is clamped at zero so
    // the expression stays defined while the amplitude search explores
    // profiles that have not yet cleared the tail horizon (w > 0 only
    // where phi is already large for any admissible amplitude).
    auto h_tail = [mass](double phi) {
        const double f = std::max(detail::f_exact(mass, phi), 0.0);
        return 2.0 * std::sqrt(f) / phi;
    };

    auto h_of = [&](double r, double phi, double a) {
        const auto [b, db] = detail::mollifier((r - r0) / bw);
        const auto [w, dw] = detail::smoothstep(2.0 * (r - r0 - 0.5));
        (void)db;
        (void)dw;
        return (1.0 - w) * (2.0 + a * b) + w * h_tail(phi);
    };

    // phi(r0+1) for a given amplitude, via y = log(phi/eps).
    auto end_log_radius = [&](double a) {
        auto traj = solve_ode(
            std::function<double(double, double)>([&](double r, double y) {
                return 0.5 * h_of(r, eps * std::exp(y), a);
            }),
            r0, 0.0, r0 + 1.0, Tolerances{1e-12, 1e-12, 2'000'000});
        return traj.value(r0 + 1.0, 0);
    };

    const double target = std::log(s1 / eps);
    double lo = 0.0;
    double f_lo = end_log_radius(lo) - target;
    if (f_lo > 0.0)
        throw ConstructionError(
            "construct: infeasible parameters, phi overshoots s1 with no bump");
    double hi = 1.0;
    double f_hi = end_log_radius(hi) - target;
    while (f_hi < 0.0) {
        hi *= 2.0;
        if (hi > 1e8)
            throw ConstructionError(
                "construct: infeasible parameters, no amplitude reaches s1");
        f_hi = end_log_radius(hi) - target;
    }
    const double amp =
        find_root([&](double a) { return end_log_radius(a) - target; }, lo, hi,
                  Tolerances{1e-13, 1e-13, 200});

    // Freeze the self-consistent profile and expose it as H(r), H'(r).
    auto frozen = std::make_shared<OdeTrajectory>(solve_ode(
        std::function<double(double, double)>([&](double r, double y) {
            return 0.5 * h_of(r, eps * std::exp(y), amp);
        }),
        r0, 0.0, r0 + 1.0, Tolerances{1e-12, 1e-12, 2'000'000}));

    auto profile = [frozen, h_tail, r0, eps, mass, bw,
                    amp](double r) -> std::pair<double, double> {
        const double phi = eps * std::exp(frozen->value(r, 0));
        const auto [b, db] = detail::mollifier((r - r0) / bw);
        const auto [w, dw] = detail::smoothstep(2.0 * (r - r0 - 0.5));
        const double ht = h_tail(phi);
        const double h = (1.0 - w) * (2.0 + amp * b) + w * ht;
        // dH_tail/dr = (f'/(2 sqrt(f)) - f/phi) * (2/phi) * phi'
        // with phi' = H*phi/2.
        double dht = 0.0;
        const double f = detail::f_exact(mass, phi);
        if (w > 0.0 && f > 0.0) {
            const double df = detail::df_exact(mass, phi);
            dht = (df / std::sqrt(f) - 2.0 * std::sqrt(f) / phi) * 0.5 * h;
        }
        const double dh = -2.0 * dw * (2.0 + amp * b) +
                          (1.0 - w) * amp * db / bw + 2.0 * dw * ht + w * dht;
        return {h, dh};
    };

    return make_h_profile(r0, eps, profile, r0 + 1.0, mass);
}

inline CounterexampleReport verify(const RadialMetric& metric,
                                   const std::vector<double>& areas) {
    if (metric.kind != MetricKind::HProfile && metric.kind != MetricKind::SchwarzschildAdS)
        throw DomainError("verify: metric must carry a horizon profile");
    CounterexampleReport report;

    // Native arclength chart: [r0, match_r] covers the perturbed region,
    // [0, 10] is a representative span of the exact metric.
    const double r_lo = metric.kind == MetricKind::HProfile ? metric.r0 : 0.0;
    const double r_hi =
        metric.kind == MetricKind::HProfile ? metric.match_r : 10.0;
    double min_r = -6.0;  // the exact tail is hyperbolic-like, R = -6
    const int n_grid = 1000;
    for (int i = 0; i <= n_grid; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / n_grid;
        min_r = std::min(min_r, scalar_curvature_at_r(metric, r));
    }
    report.min_scalar_curvature = min_r;
    report.renorm_vol = renormalized_volume(metric);
    report.horizon_area = metric.horizon_area();
    report.penrose_margin = report.renorm_vol + 0.5 * report.horizon_area;
    report.profile_samples = compare_profile(metric, areas);

    report.verdict_R_violated = min_r < -6.0 - 1e-6;
    report.verdict_margin_negative = report.penrose_margin < -1e-6;
    // Balls lose iff the generalized competitor wins at every area from the
    // first one where it is ahead.
    bool seen_positive = false;
    bool all_after = true;
    for (const auto& sample : report.profile_samples) {
        const bool gen_wins = sample.vol_generalized > sample.vol_coord_ball;
        if (gen_wins) seen_positive = true;
        else if (seen_positive) all_after = false;
    }
    report.verdict_balls_lose = seen_positive && all_after;
    return report;
}

// gap(A) = hyperbolic ball volume - renormalized coordinate volume of the
// ball of area A - half the horizon area; converges to -penrose_margin.
inline std::vector<std::pair<double, double>> margin_asymptote(
    const RadialMetric& metric, const std::vector<double>& areas) {
    const double v_ren = renormalized_volume(metric);
    const double half_horizon =
        metric.has_horizon() ? 0.5 * metric.horizon_area() : 0.0;
    std::vector<std::pair<double, double>> out;
    out.reserve(areas.size());
    for (double area : areas) {
        const double stable =
            detail::stable_coordinate_volume(metric, area, v_ren);
        out.emplace_back(
            area, hyperbolic_ball_volume_exact(area) - stable - half_horizon);
    }
    return out;
}

}  // namespace ahiso
