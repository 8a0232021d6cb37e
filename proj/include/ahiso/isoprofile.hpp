#pragma once

// Isoperimetric-profile computations over the two candidate families the
// large-volume comparison reduces to: centered coordinate balls and the
// horizon-plus-hyperbolic-ball-at-infinity competitor.  Also the large-area
// volume expansion of coordinate balls with residual-order verification,
// and the mass-coefficient extraction from the area-as-function-of-volume
// expansion.

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "ahiso/errors.hpp"
#include "ahiso/metric.hpp"
#include "ahiso/numerics.hpp"
#include "ahiso/quantities.hpp"

namespace ahiso {

enum class Winner { CoordBall, Generalized };

struct ProfileSample {
    double area = 0.0;
    double vol_coord_ball = 0.0;
    double vol_generalized = 0.0;
    Winner winner = Winner::CoordBall;
    double mean_curvature = 0.0;
};

enum class ExpansionVariant {
    HyperbolicBall,      // mass-0 series with the A^-1 term
    SchwAdSFull,         // all terms through A^-3/2
    SchwAdSUniform,      // truncated after the A^-1/2 mass term
    CompactPerturbation, // full series with caller-supplied renormalized volume
};

struct ExpansionReport {
    std::vector<double> areas;
    std::vector<double> exact;
    std::vector<double> series;
    std::vector<double> residuals;
    double fitted_order = 0.0;
};

/// Volume of the centered coordinate ball with boundary area `area`.
inline double coordinate_profile(const RadialMetric& metric, double area) {
    if (!(area > 0.0))
        throw DomainError("coordinate_profile: area must be positive");
    return ball_volume(metric, std::sqrt(area / (4.0 * kPi)));
}

/// Volume enclosed by the generalized competitor of total boundary area
/// `area`: the horizon region plus a hyperbolic ball of the remaining area.
inline double generalized_competitor(const RadialMetric& metric, double area) {
    const double h = metric.has_horizon() ? metric.horizon_area() : 0.0;
    if (!(area > h))
        throw DomainError("generalized_competitor: area not above the horizon area");
    return hyperbolic_ball_volume_exact(area - h);
}

inline std::vector<ProfileSample> compare_profile(const RadialMetric& metric,
                                                  const std::vector<double>& areas) {
    std::vector<ProfileSample> out;
    out.reserve(areas.size());
    for (double area : areas) {
        ProfileSample p;
        p.area = area;
        p.vol_coord_ball = coordinate_profile(metric, area);
        p.vol_generalized = generalized_competitor(metric, area);
        p.winner = (p.vol_coord_ball >= p.vol_generalized) ? Winner::CoordBall
                                                           : Winner::Generalized;
        p.mean_curvature =
            sphere_geometry(metric, std::sqrt(area / (4.0 * kPi))).mean_curvature;
        out.push_back(p);
    }
    return out;
}

struct ProfileDerivativeCheck {
    double fd_value = 0.0;      // (central difference of the profile in A)^-2
    double formula_value = 0.0; // 4 + 16 pi / A - 64 pi^(3/2) mass A^(-3/2)
};

/// Central-difference check of the profile-derivative identity
/// (d vol / dA)^-2 = 4 + 16 pi A^-1 - 64 pi^(3/2) m A^(-3/2).  The volume
/// difference is evaluated as one shell integral so the quotient keeps full
/// precision.
inline ProfileDerivativeCheck profile_derivative_check(const RadialMetric& metric,
                                                       double area) {
    if (metric.has_horizon() && !(area > metric.horizon_area()))
        throw DomainError("profile_derivative_check: area not above horizon area");
    const double h = area * 1e-5;
    const double s_lo = std::sqrt((area - h) / (4.0 * kPi));
    const double s_hi = std::sqrt((area + h) / (4.0 * kPi));
    auto density = [&](double sigma) {
        return 4.0 * kPi * sigma * sigma / std::sqrt(metric.potential(sigma));
    };
    Tolerances tol;
    tol.abs_tol = 1e-14;
    tol.rel_tol = 1e-12;
    const double shell = integrate(density, s_lo, s_hi, tol).value;
    ProfileDerivativeCheck out;
    const double deriv = shell / (2.0 * h);
    out.fd_value = 1.0 / (deriv * deriv);
    out.formula_value = 4.0 + 16.0 * kPi / area -
                        64.0 * std::pow(kPi, 1.5) * metric.mass *
                            std::pow(area, -1.5);
    return out;
}

namespace detail {

// Hyperbolic ball volume minus its expansion through the constant term,
// organized so nothing cancels:
//   vol0(A) - (A/2 - pi log A + pi (1 + log pi))
//     = -pi x / (1 + sqrt(1+x))^2 - 2 pi log((1 + sqrt(1+x)) / 2),  x = 4pi/A.
inline double hyperbolic_volume_defect(double area) {
    const double x = 4.0 * kPi / area;
    const double t = std::sqrt(1.0 + x);
    return -kPi * x / ((1.0 + t) * (1.0 + t)) -
           2.0 * kPi * std::log1p(x / (2.0 * (1.0 + t)));
}

// Int_R^inf (density difference - m / s^2) ds; the density difference is
// the rationalized s^2 (f_m^{-1/2} - f_0^{-1/2}), which approaches m/s^2,
// so the integrand decays like s^-4.
inline double mass_tail_integral(double mass, double R) {
    if (mass == 0.0) return 0.0;
    auto integrand = [mass](double s) {
        const double fm = f_exact(mass, s);
        const double f0 = f_hyp(s);
        const double diff =
            2.0 * mass * s / (std::sqrt(fm * f0) * (std::sqrt(fm) + std::sqrt(f0)));
        return diff - mass / (s * s);
    };
    // The integral is ~ -m/(2 R^3); a fixed absolute tolerance would
    // swamp it at large R, so the tolerance tracks the expected magnitude.
    Tolerances tol;
    tol.rel_tol = 1e-10;
    tol.abs_tol = std::max(1e-16, 1e-10 * mass / (R * R * R));
    return integrate_to_infinity(integrand, R, tol).value;
}

// Residual of the exact coordinate-ball volume against the full series,
// computed cancellation-free.  Valid for the exact metric of the given
// mass (0 = hyperbolic space).
inline double full_series_residual(double mass, double area) {
    const double R = std::sqrt(area / (4.0 * kPi));
    if (mass > 0.0 && !(R > 2.0 * mass))
        throw DomainError("expansion residual: sphere inside the horizon");
    return hyperbolic_volume_defect(area) + 3.0 * kPi * kPi / area -
           4.0 * kPi * mass_tail_integral(mass, R) -
           16.0 * std::pow(kPi, 2.5) * mass * std::pow(area, -1.5);
}

} // namespace detail

/// The truncated large-area series for the coordinate-ball volume.  The
/// renormalized volume of the exact metric is computed internally unless
/// v_renorm is supplied (required for CompactPerturbation).
inline double expansion_series(
    double mass, double area, ExpansionVariant variant,
    double v_renorm = std::numeric_limits<double>::quiet_NaN()) {
    if (!(area > 0.0))
        throw DomainError("expansion_series: area must be positive");
    const double base = 0.5 * area - kPi * std::log(area) +
                        kPi * (1.0 + std::log(kPi));
    const double mass_term =
        8.0 * std::pow(kPi, 1.5) * mass / std::sqrt(area);
    const double a1 = 3.0 * kPi * kPi / area;
    const double a32 = 16.0 * std::pow(kPi, 2.5) * mass * std::pow(area, -1.5);
    switch (variant) {
    case ExpansionVariant::HyperbolicBall:
        return base - a1;
    case ExpansionVariant::SchwAdSFull:
    case ExpansionVariant::SchwAdSUniform: {
        double v = v_renorm;
        if (std::isnan(v))
            v = (mass == 0.0)
                    ? 0.0
                    : renormalized_volume(make_schwarzschild_ads(mass));
        if (variant == ExpansionVariant::SchwAdSUniform)
            return base + v - mass_term;
        return base + v - mass_term - a1 + a32;
    }
    case ExpansionVariant::CompactPerturbation:
        if (std::isnan(v_renorm))
            throw DomainError(
                "expansion_series: CompactPerturbation needs a renormalized volume");
        return base + v_renorm - mass_term - a1 + a32;
    }
    throw DomainError("expansion_series: unknown variant");
}

/// Residuals of the exact coordinate-ball volume against the series over a
/// grid of areas, with the log-log order fit.  The residuals are computed
/// through a cancellation-free decomposition (the naive difference of two
/// O(A) quantities drowns below A^-2 in double precision near A ~ 1e6).
inline ExpansionReport expansion_residual_order(double mass,
                                                const std::vector<double>& areas,
                                                ExpansionVariant variant) {
    if (areas.size() < 4)
        throw InsufficientData("expansion_residual_order: needs >= 4 areas");
    double lo = areas.front(), hi = areas.front();
    for (double a : areas) {
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    if (!(hi >= 1e3 * lo))
        throw InsufficientData(
            "expansion_residual_order: areas must span >= 3 decades");
    if (variant == ExpansionVariant::CompactPerturbation)
        throw DomainError(
            "expansion_residual_order: no independent exact evaluation for "
            "CompactPerturbation");
    if (variant == ExpansionVariant::HyperbolicBall && mass != 0.0)
        throw DomainError(
            "expansion_residual_order: HyperbolicBall variant needs mass 0");

    const double v = (mass == 0.0)
                         ? 0.0
                         : renormalized_volume(make_schwarzschild_ads(mass));
    ExpansionReport report;
    report.areas = areas;
    for (double area : areas) {
        const double full_residual = detail::full_series_residual(mass, area);
        const double series = expansion_series(mass, area, variant, v);
        double residual = full_residual;
        if (variant == ExpansionVariant::SchwAdSUniform)
            residual += -3.0 * kPi * kPi / area +
                        16.0 * std::pow(kPi, 2.5) * mass * std::pow(area, -1.5);
        report.series.push_back(series);
        report.exact.push_back(series + residual);
        report.residuals.push_back(std::fabs(residual));
    }
    report.fitted_order = fit_log_slope(report.areas, report.residuals);
    return report;
}

struct MassCoefficientSample {
    double volume = 0.0;
    double extracted = 0.0; // (A_g(V) - A_hyp(V) + 2 V_renorm) sqrt(V)
};

namespace detail {

// Invert the hyperbolic ball volume: boundary area as a function of volume.
inline double hyperbolic_area_of_volume(double volume) {
    if (!(volume > 0.0))
        throw DomainError("hyperbolic_area_of_volume: volume must be positive");
    double hi = 8.0 * std::max(volume, 1.0) + 64.0;
    Tolerances tol;
    tol.abs_tol = 1e-9;
    tol.rel_tol = 1e-13;
    return find_root(
        [&](double a) { return hyperbolic_ball_volume_exact(a) - volume; },
        1e-12, hi, tol);
}

// Coordinate-ball volume, evaluated through the renormalized decomposition
// when the sphere lies in an exact region; keeps absolute accuracy ~1e-9
// even when the volume itself is ~1e6.
inline double stable_coordinate_volume(const RadialMetric& m, double area,
                                       double v_renorm) {
    const double R = std::sqrt(area / (4.0 * kPi));
    if (m.kind == MetricKind::HProfile && R < m.s1)
        return coordinate_profile(m, area);
    const double vol0 =
        0.5 * area - kPi * std::log(area) + kPi * (1.0 + std::log(kPi)) +
        hyperbolic_volume_defect(area);
    return vol0 + v_renorm -
           4.0 * kPi * (mass_tail_integral(m.mass, R) + m.mass / R);
}

} // namespace detail

/// For each volume, invert the coordinate-ball profile to the boundary
/// area A_g(V), compare with the hyperbolic area A_hyp(V), and report the
/// normalized mass term (A_g - A_hyp + 2 V_renorm) sqrt(V), which
/// approaches 8 sqrt(2) pi^(3/2) mass for large V.
inline std::vector<MassCoefficientSample> profile_expansion_check(
    const RadialMetric& metric, const std::vector<double>& volumes) {
    const double v_renorm = renormalized_volume(metric);
    std::vector<MassCoefficientSample> out;
    out.reserve(volumes.size());
    for (double volume : volumes) {
        if (!(volume > 0.0))
            throw DomainError("profile_expansion_check: volume must be positive");
        const double a_hyp = detail::hyperbolic_area_of_volume(volume);
        Tolerances tol;
        tol.abs_tol = 1e-8;
        tol.rel_tol = 1e-14;
        const double lo = std::max(metric.has_horizon()
                                       ? metric.horizon_area() * (1.0 + 1e-9)
                                       : 1e-12,
                                   0.5 * a_hyp);
        const double hi = 2.0 * a_hyp + 128.0 * metric.mass + 64.0;
        const double a_g = find_root(
            [&](double a) {
                return detail::stable_coordinate_volume(metric, a, v_renorm) -
                       volume;
            },
            lo, hi, tol);
        MassCoefficientSample sample;
        sample.volume = volume;
        sample.extracted = (a_g - a_hyp + 2.0 * v_renorm) * std::sqrt(volume);
        out.push_back(sample);
    }
    return out;
}

} // namespace ahiso
