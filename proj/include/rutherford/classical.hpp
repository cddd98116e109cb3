#pragma once

#include "rutherford/multipole.hpp"
#include "rutherford/types.hpp"

namespace rutherford {

/// Schwarzschild mass M (G = c = 1) and monochromatic frequency omega of a
/// massless scalar wave.
struct BlackHoleParams {
  double mass = 0.0;
  double omega = 1.0;

  BlackHoleParams() = default;
  BlackHoleParams(double mass_, double omega_) : mass(mass_), omega(omega_) {
    if (!(mass >= 0.0) || !std::isfinite(mass)) throw DomainError("BlackHoleParams: mass must be >= 0");
    if (!(omega > 0.0) || !std::isfinite(omega))
      throw DomainError("BlackHoleParams: omega must be positive");
  }

  double schwarzschild_radius() const { return 2.0 * mass; }
  /// gamma = -2 M omega (attractive).
  double gamma() const { return -2.0 * mass * omega; }
};

/// (1/r^2)(1 - r_s/r)(r_s/r + ell(ell+1)). DomainError for r <= r_s.
double effective_potential(const BlackHoleParams& bh, int ell, double r);

/// r_* = r + r_s ln(r/r_s - 1). DomainError for r <= r_s.
double tortoise_coordinate(const BlackHoleParams& bh, double r);

/// Inverse of tortoise_coordinate by bisection.
double tortoise_inverse(const BlackHoleParams& bh, double r_star, double rel_tol = 1e-14);

/// ell(ell+1) > 12 (M omega)^2, the regime where the 12 M^2 omega^2 / r^2
/// term of the rescaled radial equation can be dropped. ell = 0 is outside
/// the reduction and throws.
bool long_wavelength_valid(const BlackHoleParams& bh, int ell);

/// Coulomb problem the long-wavelength radial equation maps onto: gamma = -2 M omega, k = omega.
ScatteringParams coulomb_reduction(const BlackHoleParams& bh);

/// Phase shifts of the reduced problem; the same code path as the quantum case.
PhaseShiftFactor classical_phase_shift(const BlackHoleParams& bh, int ell);

/// Coefficients of the rescaled radial equation
/// d^2 ubar/dr^2 + [omega^2 + coulomb/r - centrifugal/r^2 + dropped/r^2] ubar = 0.
struct RadialEquationTerms {
  double coulomb;      // 4 M omega^2
  double centrifugal;  // ell (ell + 1)
  double dropped;      // 12 M^2 omega^2
};
RadialEquationTerms radial_equation_terms(const BlackHoleParams& bh, int ell);

/// Asymptotic mode u/r = (2ell+1)/(2i omega r)[(-1)^{ell+1} e^{-i omega r_c} + e^{2i delta} e^{i omega r_c}],
/// r_c = (rho - gamma ln 2 rho)/omega, rho = omega r. Requires
/// long_wavelength_valid and omega r >= validity_factor (ell(ell+1) + gamma^2).
Complex radial_mode_asymptotic(const BlackHoleParams& bh, int ell, double r,
                               double validity_factor = 10.0);

/// Regular Coulomb mode of the reduced problem, Psi_ell(omega r)/(omega r).
Complex radial_mode_coulomb(const BlackHoleParams& bh, int ell, double r);

/// Validation integrator for the rescaled radial equation in rho = omega r,
/// ubar'' + [1 - 2 gamma/rho - ell(ell+1)/rho^2 + 3 gamma^2/rho^2] ubar = 0,
/// started from regular Coulomb data at r_start and integrated adaptively
/// (Dormand-Prince 5(4)) to r_end. keep_dropped_term = false integrates the
/// reduced Coulomb equation instead. Returns ubar(r_end)/(omega r_end).
struct RadialIntegration {
  Complex ubar_over_rho;
  /// u = ubar / sqrt(1 - r_s/r), also divided by omega r.
  Complex u_over_rho;
  long steps = 0;
};
RadialIntegration integrate_radial_mode(const BlackHoleParams& bh, int ell, double r_start,
                                        double r_end, bool keep_dropped_term = true,
                                        double tol = 1e-11);

/// Same, starting at 10 r_s.
RadialIntegration integrate_radial_mode(const BlackHoleParams& bh, int ell, double r_end);

}  // namespace rutherford
