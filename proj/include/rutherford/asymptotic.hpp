#pragma once

#include "rutherford/types.hpp"

namespace rutherford {

/// Large-(rho s) form of the exact state, split into a distorted incoming
/// plane wave and a distorted outgoing spherical wave.
struct AsymptoticSplit {
  Complex psi_in;
  Complex psi_scat;
  /// rho s above the validity threshold.
  bool valid = false;

  Complex total() const { return psi_in + psi_scat; }
};

/// Default rho s above which the asymptotic split is flagged valid.
inline constexpr double kAsymptoticValidity = 10.0;

/// e^{i kz + i gamma ln(rho s)} (1 - i gamma^2/(rho s)); the factor in
/// parentheses is the back-reaction correction and is dropped when
/// backreaction is false.
Complex psi_in_distorted(const ScatteringParams& p, const FieldPoint& pt, bool backreaction);

/// -(gamma/(rho s)) Gamma(1+i gamma)/Gamma(1-i gamma) e^{i rho - i gamma ln(rho s)}.
Complex psi_scat_distorted(const ScatteringParams& p, const FieldPoint& pt);

/// Both waves. Throws DomainError at s = 0: the split does not exist on the
/// forward axis at any finite distance.
AsymptoticSplit psi_asymptotic(const ScatteringParams& p, const FieldPoint& pt,
                               bool backreaction = true,
                               double validity_threshold = kAsymptoticValidity);

/// Gamma(1 + i gamma) / Gamma(1 - i gamma) = e^{2 i delta_0}.
Complex coulomb_phase_factor(double gamma);

/// f_R = -gamma / (2k sin^2(theta/2)) Gamma(1+i gamma)/Gamma(1-i gamma), theta in (0, pi].
Complex rutherford_amplitude(const ScatteringParams& p, double theta);

/// f_R e^{-i gamma ln(s/2)}: same modulus, angular phase separated from the radial one.
Complex rutherford_amplitude_phase_separated(const ScatteringParams& p, double theta);

/// gamma^2 / (4 k^2 sin^4(theta/2)). DomainError at theta = 0, where the
/// large-distance form it derives from is never reached.
double differential_cross_section(const ScatteringParams& p, double theta);

/// First Born amplitude of the screened potential (A/r) e^{-mu r}:
/// -2 gamma k / (q^2 + mu^2), q = 2k sin(theta/2). Diverges only for mu = theta = 0.
Complex born_amplitude_yukawa(const ScatteringParams& p, double theta, double mu);

}  // namespace rutherford
