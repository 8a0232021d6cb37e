#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ahiso/imcf.hpp"

using namespace ahiso;

TEST_CASE("sphere flow on exact schwarzschild-ads") {
    RadialMetric m = make_schwarzschild_ads(1.0);
    const double area0 = 16.0 * kPi;
    auto flow = flow_spheres(m, area0, 3.0, 50);
    REQUIRE(flow.size() == 51);
    CHECK(flow[0].t == 0.0);
    CHECK(flow[0].area == doctest::Approx(area0).epsilon(1e-14));
    CHECK(flow[0].swept_volume == 0.0);
    double prev_swept = -1.0;
    for (const auto& f : flow) {
        // Area law holds exactly by construction.
        CHECK(f.area == doctest::Approx(std::exp(f.t) * area0).epsilon(1e-14));
        CHECK(std::fabs(f.hawking_mass - 1.0) <= 1e-10);
        CHECK(f.swept_volume > prev_swept - 1e-12);
        prev_swept = f.swept_volume;
        // Equality case: swept volume meets the lower bound.
        if (f.t > 0.0)
            CHECK(f.swept_volume ==
                  doctest::Approx(f.lower_bound).epsilon(1e-7));
    }
    auto audit = geroch_audit(flow);
    CHECK(audit.monotone);
    CHECK(std::fabs(audit.min_increment) <= 1e-10);
}

TEST_CASE("swept volume lower bound: equality grids") {
    for (double mass : {0.5, 1.0, 2.0}) {
        RadialMetric m = make_schwarzschild_ads(mass);
        for (double area0 : {16.0 * kPi, 100.0 * kPi}) {
            if (area0 < m.horizon_area()) continue;
            for (double tau : {1.0, 3.0}) {
                const double s0 = std::sqrt(area0 / (4.0 * kPi));
                const double s1 = std::sqrt(std::exp(tau) * area0 / (4.0 * kPi));
                const double swept = ball_volume(m, s1) - ball_volume(m, s0);
                const double bound = swept_volume_lower_bound(area0, mass, tau);
                CHECK(swept == doctest::Approx(bound).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("swept volume lower bound: mass-0 closed form and edge cases") {
    // Mass 0: the bound is exactly the hyperbolic shell volume.
    for (double area0 : {4.0 * kPi, 50.0}) {
        for (double tau : {0.5, 2.0}) {
            const double shell =
                hyperbolic_ball_volume_exact(std::exp(tau) * area0) -
                hyperbolic_ball_volume_exact(area0);
            CHECK(swept_volume_lower_bound(area0, 0.0, tau) ==
                  doctest::Approx(shell).epsilon(1e-8));
        }
    }
    CHECK(swept_volume_lower_bound(16.0 * kPi, 1.0, 0.0) == 0.0);
    CHECK_THROWS_AS(swept_volume_lower_bound(0.0, 1.0, 1.0), DomainError);
    // Large mass relative to the initial area drives the bracket nonpositive.
    CHECK_THROWS_AS(swept_volume_lower_bound(1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("flow on an h-profile metric with R >= -6") {
    RadialMetric m =
        make_h_profile(0.0, 2.0, exact_mean_curvature_profile(1.0), 5.0, 1.0);
    auto flow = flow_spheres(m, m.horizon_area(), 2.0, 40);
    auto audit = geroch_audit(flow);
    CHECK(audit.monotone);
    CHECK(audit.min_increment >= -1e-8);
    // Equality case through the interpolated profile: the Hawking mass
    // carries ~1e-7 interpolation noise, which shifts the bound by the
    // same order.
    for (const auto& f : flow)
        CHECK(f.swept_volume >= f.lower_bound - 5e-6);
}

TEST_CASE("flow input validation") {
    RadialMetric m = make_schwarzschild_ads(1.0);
    CHECK_THROWS_AS(flow_spheres(m, 1.0, 1.0, 10), DomainError); // below horizon
    CHECK_THROWS_AS(flow_spheres(m, 16.0 * kPi, -1.0, 10), DomainError);
    CHECK_THROWS_AS(flow_spheres(m, 16.0 * kPi, 1.0, 1), DomainError);
}

TEST_CASE("geroch audit edge cases") {
    std::vector<FlowSample> one(1);
    CHECK_THROWS_AS(geroch_audit(one), InsufficientData);
    std::vector<FlowSample> pair(2);
    pair[0].t = 0.0;
    pair[1].t = 1.0;
    pair[0].hawking_mass = pair[1].hawking_mass = 3.0;
    auto audit = geroch_audit(pair);
    CHECK(audit.min_increment == 0.0);
    CHECK(audit.monotone);
    pair[1].t = 0.0;
    CHECK_THROWS_AS(geroch_audit(pair), DomainError);
}

TEST_CASE("jump growth bound") {
    CHECK(jump_growth_bound(2.0, 0.0, 1.0) == 0.0);
    CHECK(jump_growth_bound(16.0 * kPi, 16.0 * kPi, 0.0) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(jump_growth_bound(0.5, 1.0, 0.0), DomainError);
    // Monotone: decreasing in T and area_omega, increasing in area_jump.
    double prev = jump_growth_bound(4.0, 8.0, 0.0);
    for (double T : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const double b = jump_growth_bound(4.0, 8.0, T);
        CHECK(b < prev);
        prev = b;
    }
    CHECK(jump_growth_bound(4.0, 8.0, 50.0) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(jump_growth_bound(8.0, 8.0, 1.0) < jump_growth_bound(4.0, 8.0, 1.0));
    CHECK(jump_growth_bound(4.0, 16.0, 1.0) > jump_growth_bound(4.0, 8.0, 1.0));
}

TEST_CASE("jump volume excess and the jump-interval integral") {
    CHECK(jump_volume_excess(16.0 * kPi) == doctest::Approx(8.0 * kPi));
    CHECK(jump_volume_excess(0.0) == 0.0);
    CHECK_THROWS_AS(jump_volume_excess(-1.0), DomainError);
    // Oracle: the explicit jump-interval integral
    //   Int_T^{T+beta} e^{3t/2} A^{3/2} (4 e^t A + 16 pi (1 - e^{-t/2}))^{-1/2} dt
    // with beta at its growth bound never exceeds half the jump area.
    for (double A : {1e2, 1e4}) {
        for (double T : {0.0, 1.0}) {
            for (double jump : {0.5 * A, A}) {
                const double beta = jump_growth_bound(A, jump, T);
                auto integrand = [&](double t) {
                    const double bracket = 4.0 * std::exp(t) * A +
                                           16.0 * kPi * (1.0 - std::exp(-0.5 * t));
                    return std::exp(1.5 * t) * std::pow(A, 1.5) /
                           std::sqrt(bracket);
                };
                const double integral = integrate(integrand, T, T + beta).value;
                CHECK(integral <= jump_volume_excess(jump) + 1e-8);
            }
        }
    }
}

TEST_CASE("coarse error integral: positivity and uniform bound") {
    // Frozen regression bound: the integral increases toward 2 pi / 3.
    const double frozen_bound = 2.0 * kPi / 3.0 + 1e-6;
    double prev = 0.0;
    for (double A : {1.0, 1e2, 1e4, 1e6, 1e8}) {
        const double v = coarse_error_integral(A);
        CHECK(v > 0.0);
        CHECK(v <= frozen_bound);
        CHECK(v > prev);
        prev = v;
    }
    // Independently-computed reference values (25-digit quadrature).
    CHECK(coarse_error_integral(1.0) ==
          doctest::Approx(0.5534465975).epsilon(1e-8));
    CHECK(coarse_error_integral(1e4) ==
          doctest::Approx(2.0929162773).epsilon(1e-8));
    // Small-area regime: the integral vanishes with A.
    CHECK(coarse_error_integral(1e-3) ==
          doctest::Approx(0.0186555297).epsilon(1e-6));
}
