#include "rutherford/classical.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

namespace rutherford {

namespace {

void check_outside_horizon(const BlackHoleParams& bh, double r, const char* who) {
  if (!(r > bh.schwarzschild_radius()) || !std::isfinite(r))
    throw DomainError(std::string(who) + ": r must exceed the Schwarzschild radius");
}

}  // namespace

double effective_potential(const BlackHoleParams& bh, int ell, double r) {
  if (ell < 0) throw DomainError("effective_potential: ell must be >= 0");
  check_outside_horizon(bh, r, "effective_potential");
  const double x = bh.schwarzschild_radius() / r;
  return (1.0 - x) * (x + ell * (ell + 1.0)) / (r * r);
}

double tortoise_coordinate(const BlackHoleParams& bh, double r) {
  check_outside_horizon(bh, r, "tortoise_coordinate");
  const double rs = bh.schwarzschild_radius();
  if (rs == 0.0) return r;
  return r + rs * std::log(r / rs - 1.0);
}

double tortoise_inverse(const BlackHoleParams& bh, double r_star, double rel_tol) {
  if (!std::isfinite(r_star)) throw DomainError("tortoise_inverse: r_star must be finite");
  const double rs = bh.schwarzschild_radius();
  if (rs == 0.0) {
    if (!(r_star > 0.0)) throw DomainError("tortoise_inverse: r_star must be positive when M = 0");
    return r_star;
  }
  // r_* is increasing in r; bracket the root then bisect.
  double lo = rs;
  double hi = std::max(2.0 * rs, r_star + 2.0 * rs);
  while (tortoise_coordinate(bh, hi) < r_star) hi *= 2.0;
  for (int it = 0; it < 400 && hi - lo > rel_tol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= rs || tortoise_coordinate(bh, mid) < r_star)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool long_wavelength_valid(const BlackHoleParams& bh, int ell) {
  if (ell < 1) throw DomainError("long_wavelength_valid: ell = 0 is outside the Coulomb reduction");
  const double m_omega = bh.mass * bh.omega;
  return ell * (ell + 1.0) > 12.0 * m_omega * m_omega;
}

ScatteringParams coulomb_reduction(const BlackHoleParams& bh) {
  return ScatteringParams(bh.gamma(), bh.omega);
}

PhaseShiftFactor classical_phase_shift(const BlackHoleParams& bh, int ell) {
  return phase_shift(ell, bh.gamma());
}

RadialEquationTerms radial_equation_terms(const BlackHoleParams& bh, int ell) {
  if (ell < 0) throw DomainError("radial_equation_terms: ell must be >= 0");
  const double w2 = bh.omega * bh.omega;
  return {4.0 * bh.mass * w2, ell * (ell + 1.0), 12.0 * bh.mass * bh.mass * w2};
}

Complex radial_mode_asymptotic(const BlackHoleParams& bh, int ell, double r,
                               double validity_factor) {
  if (!long_wavelength_valid(bh, ell))
    throw DomainError("radial_mode_asymptotic: ell(ell+1) must exceed 12 (M omega)^2");
  const double rho = bh.omega * r;
  const double g = bh.gamma();
  if (!(rho >= validity_factor * (ell * (ell + 1.0) + g * g)))
    throw DomainError("radial_mode_asymptotic: omega r is too small for the two-wave form");
  return coulomb_wave_asymptotic(ell, g, rho) / rho;
}

Complex radial_mode_coulomb(const BlackHoleParams& bh, int ell, double r) {
  if (!(r > 0.0)) throw DomainError("radial_mode_coulomb: r must be positive");
  return coulomb_wave_regular_over_rho(ell, bh.gamma(), bh.omega * r);
}

RadialIntegration integrate_radial_mode(const BlackHoleParams& bh, int ell, double r_start,
                                        double r_end, bool keep_dropped_term, double tol) {
  if (ell < 0) throw DomainError("integrate_radial_mode: ell must be >= 0");
  if (!(r_start > bh.schwarzschild_radius()) || !(r_start > 0.0))
    throw DomainError("integrate_radial_mode: r_start must lie outside the horizon");
  if (!(r_end > r_start)) throw DomainError("integrate_radial_mode: r_end must exceed r_start");
  if (!(tol > 0.0)) throw DomainError("integrate_radial_mode: tol must be positive");

  using State = std::array<double, 4>;  // Re u, Im u, Re u', Im u'
  const double g = bh.gamma();
  const double centrifugal = ell * (ell + 1.0);
  const double extra = keep_dropped_term ? 3.0 * g * g : 0.0;
  auto rhs = [&](const State& y, State& dy, double rho) {
    const double q = 1.0 - 2.0 * g / rho + (extra - centrifugal) / (rho * rho);
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = -q * y[0];
    dy[3] = -q * y[1];
  };

  const double rho0 = bh.omega * r_start;
  const double rho1 = bh.omega * r_end;
  const Complex u0 = coulomb_wave_regular(ell, g, rho0);
  const Complex du0 = coulomb_wave_regular_derivative(ell, g, rho0);
  State y{u0.real(), u0.imag(), du0.real(), du0.imag()};

  namespace ode = boost::numeric::odeint;
  auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State>());
  const long steps = static_cast<long>(
      ode::integrate_adaptive(stepper, rhs, y, rho0, rho1, std::min(0.01, 0.1 * (rho1 - rho0))));

  RadialIntegration out;
  out.ubar_over_rho = Complex(y[0], y[1]) / rho1;
  out.u_over_rho = out.ubar_over_rho / std::sqrt(1.0 - bh.schwarzschild_radius() / r_end);
  out.steps = steps;
  return out;
}

RadialIntegration integrate_radial_mode(const BlackHoleParams& bh, int ell, double r_end) {
  if (!(bh.mass > 0.0))
    throw DomainError("integrate_radial_mode: default start 10 r_s needs M > 0");
  return integrate_radial_mode(bh, ell, 10.0 * bh.schwarzschild_radius(), r_end);
}

}  // namespace rutherford
