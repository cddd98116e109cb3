#pragma once

#include "rutherford/types.hpp"

namespace rutherford {

/// Exact Coulomb scattering state normalized to a unit incident plane wave:
/// psi = e^{i rho (1-s)} e^{-pi gamma/2} Gamma(1 + i gamma) 1F1(-i gamma; 1; i rho s).
/// Regular everywhere, including the forward axis theta = 0.
Complex psi_exact(const ScatteringParams& p, const FieldPoint& pt);

/// Same field addressed by Cartesian (kx, kz) in the y = 0 plane.
Complex psi_exact_cartesian(const ScatteringParams& p, double kx, double kz);

/// |(d^2/drho^2 + (2/rho) d/drho + Delta_2/rho^2 + 1 - 2 gamma/rho) psi| / |psi|
/// by central differences of psi_exact. The rho step is h, the theta step
/// h / max(1, rho). Throws StepSizeError unless rho > h > 0 and
/// h max(1, gamma/rho) < 0.1.
double schrodinger_residual(const ScatteringParams& p, const FieldPoint& pt, double h);

/// Angular boundary s* = 1/rho of the region rho s < 1 around the forward axis.
double paraboloid_s(double rho);

/// theta* = arccos(1 - 1/rho); pi when rho <= 1/2 (the whole sphere is inside).
double paraboloid_theta(double rho);

/// kz at which a wavefront point at transverse offset kx (y = 0) enters the
/// paraboloid k(z + 1/(2k)) = k^2 x^2 / 2.
double paraboloid_entry_kz(double kx);

inline bool inside_paraboloid(const FieldPoint& pt) { return pt.rho_s() < 1.0; }

/// e^{-pi gamma/2} |Gamma(1 + i gamma)|, the damped amplitude along the forward axis.
double forward_amplitude(double gamma);

/// Leading small-(rho s) form e^{i rho (1-s)} e^{-pi gamma/2} Gamma(1+i gamma) (1 + gamma rho s).
/// Meaningful for rho s < 1; callers check inside_paraboloid().
Complex psi_small_rhos(const ScatteringParams& p, const FieldPoint& pt);

/// Forward-axis value e^{i rho} e^{-pi gamma/2} Gamma(1 + i gamma).
Complex psi_forward(const ScatteringParams& p, double rho);

}  // namespace rutherford
