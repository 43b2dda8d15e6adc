#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trace_sharp/special.hpp"

using namespace trace_sharp;
constexpr double kPi = std::numbers::pi;

TEST_CASE("psi base cases and closed values") {
    CHECK(special::psi(0, kPi / 2) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(special::psi(1, kPi) == doctest::Approx(2.0).epsilon(1e-15));
    // psi_3(pi) = omega_3 / omega_2 = 4/3
    CHECK(special::psi(3, kPi) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(special::psi(3, kPi) ==
          doctest::Approx(special::psi_quadrature_oracle(3, kPi)).epsilon(1e-13));
}

TEST_CASE("phi base cases and closed values") {
    CHECK(special::phi(0, kPi / 4) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(special::phi(1, kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
    // phi_2(pi/2) = t/2 + sin t cos t / 2 at pi/2
    CHECK(special::phi(2, kPi / 2) == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(special::phi(2, kPi / 2) ==
          doctest::Approx(special::phi_quadrature_oracle(2, kPi / 2)).epsilon(1e-13));
}

TEST_CASE("quadrature oracle spot values") {
    CHECK(std::abs(special::psi_quadrature_oracle(0, 1.0) - 1.0) <= 1e-13);
    CHECK(std::abs(special::psi_quadrature_oracle(2, kPi) - kPi / 2) <= 1e-13);
    CHECK(std::abs(special::psi_quadrature_oracle(5, kPi / 3) -
                   special::psi(5, kPi / 3)) <= 1e-12);
}

TEST_CASE("recurrence matches quadrature for k <= 12 on a 200-point grid") {
    for (int k = 0; k <= 12; ++k) {
        double worst_psi = 0.0, worst_phi = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double t = i * kPi / 199.0;
            worst_psi = std::max(worst_psi, std::abs(special::psi(k, t) -
                                                     special::psi_quadrature_oracle(k, t)));
            worst_phi = std::max(worst_phi, std::abs(special::phi(k, t) -
                                                     special::phi_quadrature_oracle(k, t)));
        }
        CHECK(worst_psi <= 1e-12);
        CHECK(worst_phi <= 1e-12);
    }
}

TEST_CASE("volume and surface identities") {
    for (int n = 2; n <= 12; ++n) {
        const double om = special::unit_ball_volume(n);
        const double om1 = special::unit_ball_volume(n - 1);
        CHECK(std::abs(om - om1 * special::psi(n, kPi)) <= 1e-12 * om);
        CHECK(std::abs(n * om - (n - 1) * om1 * special::psi(n - 2, kPi)) <= 1e-12 * n * om);
    }
}

TEST_CASE("reflection identities for psi and the half-angle link to phi") {
    for (int k = 0; k <= 12; ++k) {
        for (int i = 0; i <= 40; ++i) {
            const double t = i * kPi / 40.0;
            CHECK(std::abs(special::psi(k, kPi) - special::psi(k, t) -
                           special::psi(k, kPi - t)) <= 1e-12);
            if (t >= kPi / 2) {
                CHECK(std::abs(special::psi(k, t) - special::psi(k, kPi - t) -
                               2.0 * special::phi(k, t - kPi / 2)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("dimensional constants") {
    const auto d2 = special::constants(2);
    CHECK(d2.a_n == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(d2.c_n == doctest::Approx(8.0 / (kPi * kPi)).epsilon(1e-14));
    CHECK(special::constants(3).a_n == doctest::Approx(4.0).epsilon(1e-14));

    for (int n = 2; n <= 50; ++n) {
        const auto d = special::constants(n);
        CHECK(d.a_n > 2.0);
        CHECK(d.b_n > 6.0);
        CHECK(n * d.c_n / (n + 2) < 1.0);
        if (n <= 48) {
            const auto d2up = special::constants(n + 2);
            CHECK(std::abs(d2up.a_n - d.a_n * (n + 1) / n) <= 1e-14 * d2up.a_n);
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(special::psi(-1, 1.0), std::domain_error);
    CHECK_THROWS_AS(special::psi(2, -0.5), std::domain_error);
    CHECK_THROWS_AS(special::phi(2, kPi + 0.5), std::domain_error);
    CHECK_THROWS_AS(special::constants(1), std::domain_error);
}
