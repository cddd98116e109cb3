#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "rutherford/asymptotic.hpp"
#include "rutherford/classical.hpp"

using namespace rutherford;
using std::numbers::pi;

TEST_CASE("parameters") {
  const BlackHoleParams bh(1.0, 0.2);
  CHECK(bh.schwarzschild_radius() == 2.0);
  CHECK(bh.gamma() == doctest::Approx(-0.4));
  CHECK_THROWS_AS(BlackHoleParams(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(BlackHoleParams(1.0, 0.0), DomainError);
}

TEST_CASE("effective potential") {
  const BlackHoleParams bh(1.0, 1.0);
  CHECK(effective_potential(bh, 2, 10.0) == doctest::Approx(0.0496).epsilon(1e-14));
  CHECK(effective_potential(bh, 2, 1e8) < 1e-15);
  CHECK(effective_potential(bh, 3, 2.0 * (1.0 + 1e-12)) < 1e-11);
  CHECK_THROWS_AS(effective_potential(bh, 2, 2.0), DomainError);
  CHECK_THROWS_AS(effective_potential(bh, 2, 1.0), DomainError);
}

TEST_CASE("tortoise coordinate") {
  const BlackHoleParams bh(0.75, 1.0);
  const double rs = bh.schwarzschild_radius();
  CHECK(tortoise_coordinate(bh, 2.0 * rs) == doctest::Approx(2.0 * rs));
  CHECK(tortoise_coordinate(bh, rs * (1.0 + 1e-12)) < -20.0);
  CHECK_THROWS_AS(tortoise_coordinate(bh, rs), DomainError);
  const double h = 1e-5;
  for (double r = 1.05 * rs; r < 100 * rs; r *= 1.7) {
    const double d = (tortoise_coordinate(bh, r + h) - tortoise_coordinate(bh, r - h)) / (2 * h);
    CHECK(d > 0.0);
    CHECK(d == doctest::Approx(1.0 / (1.0 - rs / r)).epsilon(1e-6));
  }
  for (double r = 1.01 * rs; r < 1e3 * rs; r *= 1.3) {
    CAPTURE(r);
    CHECK(std::abs(tortoise_inverse(bh, tortoise_coordinate(bh, r)) - r) < 1e-10 * r);
  }
  CHECK(tortoise_inverse(BlackHoleParams(0.0, 1.0), 7.0) == 7.0);
}

TEST_CASE("long-wavelength regime") {
  CHECK(long_wavelength_valid(BlackHoleParams(0.1, 1.0), 1));
  CHECK_FALSE(long_wavelength_valid(BlackHoleParams(10.0, 1.0), 1));
  CHECK(long_wavelength_valid(BlackHoleParams(0.999, 1.0), 3));
  CHECK_FALSE(long_wavelength_valid(BlackHoleParams(1.0, 1.0), 3));
  CHECK_THROWS_AS(long_wavelength_valid(BlackHoleParams(0.1, 1.0), 0), DomainError);
  // The dropped term is smaller than the centrifugal one exactly when valid.
  for (double m : {0.05, 0.5, 1.0, 3.0})
    for (int l : {1, 2, 3, 6}) {
      const BlackHoleParams bh(m, 1.0);
      const auto t = radial_equation_terms(bh, l);
      for (double r : {5.0, 50.0, 500.0})
        CHECK((t.dropped / (r * r) < t.centrifugal / (r * r)) == long_wavelength_valid(bh, l));
    }
}

TEST_CASE("Coulomb reduction") {
  const auto free = coulomb_reduction(BlackHoleParams(0.0, 1.0));
  CHECK(free.gamma == 0.0);
  const auto red = coulomb_reduction(BlackHoleParams(1.0, 0.2));
  CHECK(red.gamma == doctest::Approx(-0.4));
  CHECK(red.k == 0.2);
  const BlackHoleParams bh(0.05, 1.0);
  for (int l : {1, 2, 5, 40}) {
    const auto a = classical_phase_shift(bh, l);
    const auto b = phase_shift(l, -0.1);
    CHECK(a.factor == b.factor);
    CHECK(a.delta == b.delta);
  }
  // Cross-section is even in gamma.
  const auto r = coulomb_reduction(bh);
  for (double th : {0.3, 1.0, 2.7})
    CHECK(std::norm(rutherford_amplitude(r, th)) ==
          doctest::Approx(std::norm(rutherford_amplitude(ScatteringParams(0.1, 1.0), th)))
              .epsilon(1e-14));
}

TEST_CASE("asymptotic radial mode") {
  const BlackHoleParams free(0.0, 2.0);
  for (int l : {1, 3}) {
    const double r = 400.0, rho = 2.0 * r;
    const double sign = l % 2 == 0 ? -1.0 : 1.0;
    const Complex ref = (2.0 * l + 1.0) / (2.0 * kI * rho) *
                        (sign * std::exp(-kI * rho) + std::exp(kI * rho));
    CHECK(std::abs(radial_mode_asymptotic(free, l, r) - ref) < 1e-14);
  }
  const BlackHoleParams bh(0.05, 1.0);
  const Complex c = radial_mode_coulomb(bh, 2, 500.0);
  CHECK(std::abs(radial_mode_asymptotic(bh, 2, 500.0) - c) / std::abs(c) < 1e-2);
  CHECK_THROWS_AS(radial_mode_asymptotic(bh, 2, 10.0), DomainError);
  CHECK_THROWS_AS(radial_mode_asymptotic(BlackHoleParams(10.0, 1.0), 1, 1e6), DomainError);
  CHECK_THROWS_AS(radial_mode_asymptotic(bh, 0, 500.0), DomainError);
}

TEST_CASE("validation integrator") {
  const BlackHoleParams bh(0.05, 1.0);
  // Without the dropped term the integrator must reproduce the Coulomb wave.
  const auto pure = integrate_radial_mode(bh, 2, 1.0, 500.0, false);
  const Complex c = radial_mode_coulomb(bh, 2, 500.0);
  CHECK(std::abs(pure.ubar_over_rho - c) / std::abs(c) < 1e-7);
  // With it, the mode stays within 1% of the reduced one.
  const auto full = integrate_radial_mode(bh, 2, 500.0);
  CHECK(std::abs(full.ubar_over_rho - c) / std::abs(c) < 1e-2);
  CHECK(std::abs(full.ubar_over_rho - c) > 0.0);
  CHECK(full.steps > 10);
  CHECK(std::abs(full.u_over_rho / full.ubar_over_rho - 1.0 / std::sqrt(1.0 - 0.1 / 500.0)) <
        1e-14);
  CHECK_THROWS_AS(integrate_radial_mode(bh, 2, 0.05, 100.0), DomainError);
  CHECK_THROWS_AS(integrate_radial_mode(bh, 2, 10.0, 5.0), DomainError);
  CHECK_THROWS_AS(integrate_radial_mode(BlackHoleParams(0.0, 1.0), 2, 100.0), DomainError);
}
