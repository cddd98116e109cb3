#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "rutherford/exact.hpp"

using namespace rutherford;
using std::numbers::pi;

TEST_CASE("no interaction gives the plane wave") {
  const ScatteringParams p(0.0, 1.0);
  for (double rho : {0.0, 0.3, 4.0, 55.0, 300.0})
    for (double th : {0.0, 0.1, 1.0, 2.0, pi}) {
      CAPTURE(rho);
      CAPTURE(th);
      CHECK(std::abs(psi_exact(p, {rho, th}) - std::exp(kI * rho * std::cos(th))) < 1e-12);
    }
}

TEST_CASE("forward axis modulus is independent of rho") {
  const ScatteringParams p(1.0, 1.0);
  const double expected = std::exp(-pi / 2) * std::sqrt(pi / std::sinh(pi));
  CHECK(expected == doctest::Approx(0.108422).epsilon(1e-5));
  for (double rho : {0.0, 1.0, 10.0, 1000.0}) {
    CHECK(std::abs(psi_exact(p, {rho, 0.0})) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(std::abs(psi_forward(p, rho)) == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(forward_amplitude(1.0) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("psi_forward") {
  CHECK(std::abs(psi_forward(ScatteringParams(0.0, 1.0), 2.5) - std::exp(kI * 2.5)) < 1e-15);
  double prev = 1.0;
  for (double g = 0.25; g <= 8.0; g += 0.25) {
    const double m = std::abs(psi_forward(ScatteringParams(g, 1.0), 3.0));
    CHECK(m < prev);
    prev = m;
  }
  CHECK(prev < 1e-9);
}

TEST_CASE("Cartesian addressing matches polar") {
  const ScatteringParams p(0.4, 1.0);
  CHECK(std::abs(psi_exact_cartesian(p, 3.0, 4.0) - psi_exact(p, {5.0, std::atan2(3.0, 4.0)})) <
        1e-15);
  CHECK(std::abs(psi_exact_cartesian(p, -3.0, 4.0) - psi_exact_cartesian(p, 3.0, 4.0)) < 1e-15);
  CHECK(std::abs(psi_exact_cartesian(p, 0.0, -7.0) - psi_exact(p, {7.0, pi})) < 1e-15);
}

TEST_CASE("Schroedinger residual examples") {
  CHECK(schrodinger_residual(ScatteringParams(0.5, 1.0), {5.0, 1.0}, 1e-3) < 1e-5);
  CHECK(schrodinger_residual(ScatteringParams(0.0, 1.0), {8.0, 2.0}, 1e-3) < 1e-5);
  CHECK(schrodinger_residual(ScatteringParams(1.0, 1.0), {3.0, 0.0}, 1e-3) < 1e-5);
  CHECK_THROWS_AS(schrodinger_residual(ScatteringParams(0.5, 1.0), {5.0, 1.0}, 0.0), StepSizeError);
  CHECK_THROWS_AS(schrodinger_residual(ScatteringParams(0.5, 1.0), {0.5, 1.0}, 0.6), StepSizeError);
  CHECK_THROWS_AS(schrodinger_residual(ScatteringParams(0.5, 1.0), {5.0, 1.0}, 0.2), StepSizeError);
  CHECK_THROWS_AS(schrodinger_residual(ScatteringParams(50.0, 1.0), {2.0, 1.0}, 0.01),
                  StepSizeError);
}

TEST_CASE("Schroedinger residual scales as h^2") {
  const ScatteringParams p(0.5, 1.0);
  std::vector<double> hs, rs;
  for (double h : {1e-3, 2e-3, 4e-3, 1e-2}) {
    hs.push_back(h);
    rs.push_back(schrodinger_residual(p, {5.0, 1.0}, h));
  }
  CHECK(oracle::loglog_slope(hs, rs) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("Schroedinger residual on a random sample") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> rho(1.0, 20.0), th(0.1, pi - 0.1), g(-1.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const FieldPoint pt(rho(rng), th(rng));
    const ScatteringParams p(g(rng), 1.0);
    CAPTURE(pt.rho());
    CAPTURE(pt.theta());
    CAPTURE(p.gamma);
    CHECK(schrodinger_residual(p, pt, 1e-3) < 1e-5);
  }
}

TEST_CASE("paraboloid geometry") {
  CHECK(paraboloid_s(10.0) == doctest::Approx(0.1));
  CHECK(paraboloid_theta(10.0) == doctest::Approx(0.4510).epsilon(1e-4));
  CHECK(paraboloid_s(1.0) == doctest::Approx(1.0));
  CHECK(paraboloid_theta(1.0) == doctest::Approx(pi / 2));
  CHECK(paraboloid_theta(0.3) == doctest::Approx(pi));
  CHECK(paraboloid_entry_kz(10.0) == doctest::Approx(49.5));
  CHECK_THROWS_AS(paraboloid_s(0.0), DomainError);
  // The entry point lies on rho s = 1.
  const FieldPoint entry = FieldPoint::from_cartesian(10.0, paraboloid_entry_kz(10.0));
  CHECK(entry.rho_s() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(inside_paraboloid(FieldPoint::from_cartesian(10.0, 60.0)));
  CHECK_FALSE(inside_paraboloid(FieldPoint::from_cartesian(10.0, 40.0)));
}

TEST_CASE("small rho s expansion") {
  const ScatteringParams p(1.0, 1.0);
  CHECK(std::abs(psi_small_rhos(p, {7.0, 0.0}) - psi_forward(p, 7.0)) < 1e-15);
  const FieldPoint pt(2.0, 0.05);
  CHECK(std::abs(psi_small_rhos(p, pt) - psi_exact(p, pt)) / std::abs(psi_exact(p, pt)) < 1e-2);
  const ScatteringParams free(0.0, 1.0);
  CHECK(std::abs(psi_small_rhos(free, {3.0, 0.4}) - std::exp(kI * 3.0 * std::cos(0.4))) < 1e-15);
}

TEST_CASE("damped interior plateau of the field map") {
  const ScatteringParams p(0.4, 1.0);
  const double plateau = forward_amplitude(0.4);
  CHECK(plateau == doctest::Approx(std::exp(-0.2 * pi) * std::abs(oracle::gamma_one_plus_i(0.4)))
                       .epsilon(1e-10));
  int checked = 0;
  for (double rho = 25.0; rho <= 90.0; rho += 5.0)
    for (double th = 0.0; th < 1.0; th += 0.01) {
      const FieldPoint pt(rho, th);
      if (!(pt.rho_s() < 0.1)) break;
      CHECK(std::abs(std::abs(psi_exact(p, pt)) / plateau - 1.0) < 0.1);
      ++checked;
    }
  CHECK(checked > 20);
  // Far outside the paraboloid the modulus returns close to 1.
  CHECK(std::abs(std::abs(psi_exact(p, FieldPoint::from_cartesian(0.0, -40.0))) - 1.0) < 0.05);
}

TEST_CASE("bounded on a compact set") {
  const ScatteringParams p(2.0, 1.0);
  double mx = 0.0;
  for (double rho = 0.0; rho <= 30.0; rho += 0.5)
    for (double th = 0.0; th <= pi; th += 0.05) mx = std::max(mx, std::abs(psi_exact(p, {rho, th})));
  CHECK(std::isfinite(mx));
  CHECK(mx < 5.0);
}
