#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ahiso/metric.hpp"

using namespace ahiso;

TEST_CASE("hyperbolic space: potential, warp, curvature") {
    RadialMetric m = make_hyperbolic();
    CHECK(m.potential(1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_FALSE(m.has_horizon());

    WarpData w = warp(m, 1.0);
    CHECK(w.phi == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
    CHECK(w.dphi == doctest::Approx(std::cosh(1.0)).epsilon(1e-12));
    CHECK(w.H == doctest::Approx(2.0 / std::tanh(1.0)).epsilon(1e-12));

    for (int i = 0; i < 100; ++i) {
        const double s = 0.05 + 0.5 * i;
        CHECK(scalar_curvature(m, s) == doctest::Approx(-6.0).epsilon(1e-8));
        CHECK(ricci_normal(m, s) == doctest::Approx(-2.0).epsilon(1e-12));
    }
    CHECK(arclength(m, 1.0) == doctest::Approx(std::asinh(1.0)).epsilon(1e-12));
    CHECK(arclength(m, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("schwarzschild-ads: horizon data and closed forms") {
    RadialMetric m = make_schwarzschild_ads(1.0);
    CHECK(m.horizon_radius() == doctest::Approx(2.0));
    CHECK(m.horizon_area() == doctest::Approx(16.0 * kPi).epsilon(1e-14));
    // Horizon is a regular point of the chart: f(2m) = 4m^2, H = 2.
    CHECK(m.potential(2.0) == doctest::Approx(4.0).epsilon(1e-14));
    WarpData wh = warp(m, 0.0);
    CHECK(wh.phi == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(wh.H == doctest::Approx(2.0).epsilon(1e-10));

    RadialMetric half = make_schwarzschild_ads(0.5);
    CHECK(half.potential(1.0) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(make_schwarzschild_ads(0.0), DomainError);
    CHECK_THROWS_AS(make_schwarzschild_ads(-1.0), DomainError);
    CHECK_THROWS_AS(m.potential(1.0), DomainError);
}

TEST_CASE("schwarzschild-ads: mean curvature against the area identity") {
    // Oracle: H^2 = 4 + 16 pi / A - 64 pi^(3/2) m A^(-3/2) at A = 4 pi s^2.
    RadialMetric m = make_schwarzschild_ads(1.0);
    const double s = 3.0;
    const double r = arclength(m, s);
    WarpData w = warp(m, r);
    CHECK(w.phi == doctest::Approx(3.0).epsilon(1e-9));
    const double A = 4.0 * kPi * s * s;
    const double h_sq = 4.0 + 16.0 * kPi / A -
                        64.0 * std::pow(kPi, 1.5) * 1.0 / std::pow(A, 1.5);
    CHECK(w.H * w.H == doctest::Approx(h_sq).epsilon(1e-9));
    CHECK(w.H == doctest::Approx(2.0 * std::sqrt(28.0 / 3.0) / 3.0).epsilon(1e-9));
}

TEST_CASE("schwarzschild-ads: scalar curvature is -6") {
    RadialMetric m = make_schwarzschild_ads(1.0);
    CHECK(scalar_curvature(m, 3.0) == doctest::Approx(-6.0).epsilon(1e-12));
    for (int i = 0; i < 100; ++i) {
        const double s = 2.0 + 0.5 * i;
        CHECK(scalar_curvature(m, s) == doctest::Approx(-6.0).epsilon(1e-8));
    }
}

TEST_CASE("schwarzschild-ads: radial ricci eigenvalue") {
    RadialMetric m = make_schwarzschild_ads(1.0);
    // Closed form -f'(s)/s: horizon value and asymptotic limit.
    CHECK(ricci_normal(m, 2.0) == doctest::Approx(-2.25).epsilon(1e-12));
    CHECK(ricci_normal(m, 1e3) == doctest::Approx(-2.0).epsilon(1e-8));
    // Cross-check -2 phi''/phi by central differences of the warp.
    const double r = 0.5;
    // phi from a fresh ODE solve terminating exactly at the query point, so
    // the difference oracle is free of dense-output interpolation error.
    Tolerances tight;
    tight.abs_tol = 1e-13;
    tight.rel_tol = 1e-13;
    auto phi_at = [&](double rq) {
        auto traj = solve_ode(
            [](double, double phi) {
                return std::sqrt(1.0 + phi * phi - 2.0 / phi);
            },
            0.0, 2.0, rq, tight);
        return traj.value(rq);
    };
    auto second_diff = [&](double h) {
        return (phi_at(r + h) - 2.0 * phi_at(r) + phi_at(r - h)) / (h * h);
    };
    // Richardson-extrapolated central difference.
    const double d2 = (4.0 * second_diff(0.005) - second_diff(0.01)) / 3.0;
    const double fd = -2.0 * d2 / phi_at(r);
    CHECK(ricci_normal(m, warp(m, r).phi) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("arclength: independent ODE cross-check") {
    RadialMetric m = make_schwarzschild_ads(1.0);
    auto traj = solve_ode(
        [](double s, double) {
            return 1.0 / std::sqrt(1.0 + s * s - 2.0 / s);
        },
        2.0, 0.0, 10.0);
    CHECK(arclength(m, 10.0) == doctest::Approx(traj.value(10.0)).epsilon(1e-9));
    CHECK(arclength(m, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("chart consistency for exact metrics") {
    for (double mass : {0.5, 1.0, 2.0}) {
        RadialMetric m = make_schwarzschild_ads(mass);
        for (int i = 1; i <= 20; ++i) {
            const double s = 2.0 * mass + 0.7 * i;
            const double r = arclength(m, s);
            WarpData w = warp(m, r);
            const double h_area_chart = 2.0 * std::sqrt(m.potential(s)) / s;
            CHECK(w.H == doctest::Approx(h_area_chart).epsilon(1e-8));
            // f = s^2 H^2 / 4 reproduces 1 + s^2 - 2m/s.
            CHECK(0.25 * s * s * h_area_chart * h_area_chart ==
                  doctest::Approx(1.0 + s * s - 2.0 * mass / s).epsilon(1e-12));
        }
    }
}

TEST_CASE("h-profile: exact profile reproduces schwarzschild-ads") {
    RadialMetric ref = make_schwarzschild_ads(1.0);
    HProfileFn h = exact_mean_curvature_profile(1.0);
    RadialMetric m = make_h_profile(0.0, 2.0, h, 5.0, 1.0);
    CHECK(m.horizon_area() == doctest::Approx(16.0 * kPi).epsilon(1e-12));
    for (int i = 0; i <= 40; ++i) {
        const double r = 0.25 * i; // both charts: interior and tail
        CHECK(warp(m, r).phi ==
              doctest::Approx(warp(ref, r).phi).epsilon(1e-8));
        CHECK(warp(m, r).H == doctest::Approx(warp(ref, r).H).epsilon(1e-8));
    }
    // Tail region is exactly Schwarzschild-AdS: R = -6.
    for (int i = 0; i <= 20; ++i) {
        const double s = m.s1 * (1.0 + 0.5 * i);
        CHECK(scalar_curvature(m, s) == doctest::Approx(-6.0).epsilon(1e-8));
    }
    // Interior closed-form curvature agrees with the exact value too.
    for (int i = 1; i <= 10; ++i) {
        const double s = 2.0 + 0.3 * i;
        CHECK(scalar_curvature(m, s) == doctest::Approx(-6.0).epsilon(1e-6));
        CHECK(ricci_normal(m, s) ==
              doctest::Approx(ricci_normal(ref, s)).epsilon(1e-6));
    }
}

TEST_CASE("h-profile: construction rejects bad profiles") {
    HProfileFn flat = [](double) { return std::make_pair(2.0, 0.0); };
    CHECK_THROWS_AS(make_h_profile(0.0, 2.0, flat, 5.0, 1.0), ConstructionError);

    HProfileFn wrong_start = [](double) { return std::make_pair(2.5, 0.0); };
    CHECK_THROWS_AS(make_h_profile(0.0, 2.0, wrong_start, 5.0, 1.0),
                    ConstructionError);

    // Valid interior but mismatched tail mass at match_r.
    HProfileFn h = exact_mean_curvature_profile(1.0);
    CHECK_THROWS_AS(make_h_profile(0.0, 2.0, h, 5.0, 3.0), ConstructionError);

    CHECK_THROWS_AS(make_h_profile(0.0, -1.0, h, 5.0, 1.0), DomainError);
    CHECK_THROWS_AS(make_h_profile(5.0, 2.0, h, 1.0, 1.0), DomainError);
}

TEST_CASE("h-profile: monotone warp and strict H > 2") {
    HProfileFn h = exact_mean_curvature_profile(0.5);
    RadialMetric m = make_h_profile(0.0, 1.0, h, 4.0, 0.5);
    double prev_phi = warp(m, 0.0).phi;
    for (int i = 1; i <= 60; ++i) {
        const double r = 0.1 * i;
        WarpData w = warp(m, r);
        CHECK(w.phi > prev_phi);
        CHECK(w.H > 2.0);
        prev_phi = w.phi;
    }
}
