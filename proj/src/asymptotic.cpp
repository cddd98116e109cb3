#include "rutherford/asymptotic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rutherford/specfun.hpp"

namespace rutherford {

namespace {

void check_angle(double theta, const char* who) {
  if (!(theta > 0.0 && theta <= std::numbers::pi))
    throw DomainError(std::string(who) +
                      ": theta must lie in (0, pi]; the large-distance form does not reach the "
                      "forward axis (rho s >> 1 fails at theta = 0)");
}

double half_angle_sin2(double theta) {
  const double h = std::sin(0.5 * theta);
  return h * h;
}

void check_split_point(const FieldPoint& pt) {
  if (!(pt.rho_s() > 0.0))
    throw DomainError(
        "psi_asymptotic: rho s must be positive; the incoming/scattered split does not exist on "
        "the forward axis");
}

}  // namespace

Complex coulomb_phase_factor(double gamma) {
  const Complex lg = specfun::log_gamma_complex({1.0, gamma});
  // Gamma(1 - i gamma) = conj(Gamma(1 + i gamma))
  return std::exp(2.0 * kI * lg.imag());
}

Complex psi_in_distorted(const ScatteringParams& p, const FieldPoint& pt, bool backreaction) {
  check_split_point(pt);
  const double rs = pt.rho_s();
  Complex w = std::exp(kI * (pt.kz() + p.gamma * std::log(rs)));
  if (backreaction) w *= Complex(1.0, -p.gamma * p.gamma / rs);
  return w;
}

Complex psi_scat_distorted(const ScatteringParams& p, const FieldPoint& pt) {
  check_split_point(pt);
  const double rs = pt.rho_s();
  return -(p.gamma / rs) * coulomb_phase_factor(p.gamma) *
         std::exp(kI * (pt.rho() - p.gamma * std::log(rs)));
}

AsymptoticSplit psi_asymptotic(const ScatteringParams& p, const FieldPoint& pt, bool backreaction,
                               double validity_threshold) {
  return {psi_in_distorted(p, pt, backreaction), psi_scat_distorted(p, pt),
          pt.rho_s() > validity_threshold};
}

Complex rutherford_amplitude(const ScatteringParams& p, double theta) {
  check_angle(theta, "rutherford_amplitude");
  return -p.gamma / (2.0 * p.k * half_angle_sin2(theta)) * coulomb_phase_factor(p.gamma);
}

Complex rutherford_amplitude_phase_separated(const ScatteringParams& p, double theta) {
  check_angle(theta, "rutherford_amplitude_phase_separated");
  const double s_half = half_angle_sin2(theta);  // s/2
  return rutherford_amplitude(p, theta) * std::exp(-kI * p.gamma * std::log(s_half));
}

double differential_cross_section(const ScatteringParams& p, double theta) {
  check_angle(theta, "differential_cross_section");
  const double s2 = half_angle_sin2(theta);
  return p.gamma * p.gamma / (4.0 * p.k * p.k * s2 * s2);
}

Complex born_amplitude_yukawa(const ScatteringParams& p, double theta, double mu) {
  if (!(mu >= 0.0)) throw DomainError("born_amplitude_yukawa: mu must be >= 0");
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw DomainError("born_amplitude_yukawa: theta must lie in [0, pi]");
  const double q = 2.0 * p.k * std::sin(0.5 * theta);
  const double denom = q * q + mu * mu;
  if (denom == 0.0)
    throw DomainError("born_amplitude_yukawa: unscreened amplitude diverges at theta = 0");
  return -2.0 * p.gamma * p.k / denom;
}

}  // namespace rutherford
