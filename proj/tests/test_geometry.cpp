#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trace_sharp/geometry.hpp"
#include "trace_sharp/special.hpp"

using namespace trace_sharp;
constexpr double kPi = std::numbers::pi;

TEST_CASE("half-disk and half-ball measures") {
    const auto m2 = geometry::measures({kPi / 2, 0.0, 2});
    CHECK(m2.boundary_share == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(m2.relative_perimeter == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(m2.volume == doctest::Approx(kPi / 2).epsilon(1e-14));

    // equatorial disk area omega_2 in dimension three
    const auto m3 = geometry::measures({kPi / 2, 0.0, 3});
    CHECK(m3.relative_perimeter == doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("positive varphi matches the raw closed forms") {
    for (int n = 2; n <= 6; ++n) {
        const double om1 = special::unit_ball_volume(n - 1);
        for (double theta : {1.2, 2.0, 2.8}) {
            for (double varphi : {0.4, 0.9}) {
                const auto m = geometry::measures({theta, varphi, n});
                const double r = std::sin(theta) / std::sin(varphi);
                CHECK(m.relative_perimeter ==
                      doctest::Approx((n - 1) * om1 * special::psi(n - 2, varphi) *
                                      std::pow(r, n - 1))
                          .epsilon(1e-12));
                CHECK(m.volume == doctest::Approx(om1 * (special::psi(n, theta) -
                                                         special::psi(n, varphi) *
                                                             std::pow(r, n)))
                                      .epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("volume plus complement equals the ball volume on a grid") {
    for (int n = 2; n <= 8; ++n) {
        const double om = special::unit_ball_volume(n);
        double worst = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double theta = i * kPi / 101.0;
            for (int j = 0; j < 100; ++j) {
                const double varphi = j * theta / 100.0;
                const auto m = geometry::measures({theta, varphi, n});
                worst = std::max(worst,
                                 std::abs(m.volume + m.complement_volume - om));
            }
        }
        CHECK(worst <= 1e-12 * om);
    }
}

TEST_CASE("boundary share increases with theta") {
    for (int n = 2; n <= 6; ++n) {
        double prev = 0.0;
        for (int i = 1; i <= 60; ++i) {
            const double theta = i * kPi / 61.0;
            const auto m = geometry::measures({theta, 0.3 * theta, n});
            CHECK(m.boundary_share > prev);
            prev = m.boundary_share;
        }
    }
}

TEST_CASE("varphi -> 0 continuity of the measures") {
    for (int n = 2; n <= 8; ++n) {
        for (double theta : {0.7, kPi / 2, 2.4}) {
            const auto lim = geometry::measures({theta, 0.0, n});
            const auto near = geometry::measures({theta, 1e-8, n});
            CHECK(near.relative_perimeter ==
                  doctest::Approx(lim.relative_perimeter).epsilon(1e-6));
            CHECK(near.volume == doctest::Approx(lim.volume).epsilon(1e-6));
            CHECK(near.complement_volume ==
                  doctest::Approx(lim.complement_volume).epsilon(1e-6));
        }
    }
}

TEST_CASE("kernels agree with the direct ratios at moderate angles") {
    for (int n = 2; n <= 10; ++n) {
        for (double p : {0.3, 0.8, 1.5, 2.6}) {
            CHECK(geometry::perimeter_kernel(p, n) ==
                  doctest::Approx(special::psi(n - 2, p) / std::pow(std::sin(p), n - 1))
                      .epsilon(1e-13));
            CHECK(geometry::volume_kernel(p, n) ==
                  doctest::Approx(special::psi(n, p) / std::pow(std::sin(p), n))
                      .epsilon(1e-13));
        }
        // continuity across the series cutoff
        CHECK(geometry::perimeter_kernel(0.2499999, n) ==
              doctest::Approx(geometry::perimeter_kernel(0.2500001, n)).epsilon(1e-9));
    }
}

TEST_CASE("cap angle: symmetry, round trip, and an independent oracle") {
    for (int n = 2; n <= 8; ++n)
        CHECK(geometry::cap_angle(0.5, n) == doctest::Approx(kPi / 2).epsilon(1e-12));

    for (int n = 2; n <= 6; ++n) {
        const double total = special::psi(n, kPi);
        double prev = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double beta = i / 101.0;
            const double theta = geometry::cap_angle(beta, n);
            CHECK(std::abs(special::psi(n, theta) - beta * total) <= 1e-11);
            CHECK(theta > prev);  // strictly increasing in beta
            prev = theta;
        }
    }

    // n = 2, beta = 1/4: psi_2(theta) = (theta - sin theta cos theta)/2, so
    // theta solves theta - sin theta cos theta = pi/4; bisect that directly.
    double lo = 0.0, hi = kPi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid - std::sin(mid) * std::cos(mid) < kPi / 4 ? lo : hi) = mid;
    }
    const double oracle = 0.5 * (lo + hi);
    CHECK(geometry::cap_angle(0.25, 2) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(geometry::cap_angle(0.25, 2) ==
          doctest::Approx(1.1549407300050287).epsilon(1e-12));
}

TEST_CASE("parameter domain predicates") {
    CHECK(geometry::in_theta({kPi / 2, 0.0, 2}));
    CHECK_FALSE(geometry::in_theta({kPi / 4, 0.0, 2}));
    CHECK(geometry::in_theta({3 * kPi / 4, kPi / 4, 2}));

    CHECK(geometry::in_xi({kPi / 2, 0.0, 2}, 0.5));   // volume exactly sigma|B^n|
    CHECK_FALSE(geometry::in_xi({kPi / 2, 0.0, 2}, 0.25));
    CHECK(geometry::in_xi({1e-4, 0.0, 2}, 0.1));
}

TEST_CASE("removed ball geometry") {
    // theta = 2 varphi puts the removed ball's center on the unit circle
    const auto b = geometry::removed_ball({1.2, 0.6, 2});
    CHECK(std::abs(b.center_x1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.radius == doctest::Approx(std::sin(1.2) / std::sin(0.6)).epsilon(1e-15));
    CHECK_THROWS_AS(geometry::removed_ball({1.2, 0.0, 2}), std::domain_error);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(geometry::measures({1.0, 1.5, 2}), std::domain_error);
    CHECK_THROWS_AS(geometry::measures({0.0, 0.0, 2}), std::domain_error);
    CHECK_THROWS_AS(geometry::cap_angle(0.0, 2), std::domain_error);
    CHECK_THROWS_AS(geometry::cap_angle(1.0, 2), std::domain_error);
}
