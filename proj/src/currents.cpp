#include "rutherford/currents.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rutherford/specfun.hpp"

namespace rutherford {

namespace detail {

void check_current_step(const ScatteringParams& p, const FieldPoint& pt, double h) {
  if (!(h > 0.0) || !(pt.rho() > h)) throw StepSizeError("current_numeric: need rho > h > 0");
  if (h * std::max(1.0, std::abs(p.gamma) / pt.rho()) >= 0.1)
    throw StepSizeError("current_numeric: step too large for the local wavelength");
}

}  // namespace detail

namespace {

void check_open_angle(double theta, const char* who) {
  if (!(theta > 0.0 && theta <= std::numbers::pi))
    throw DomainError(std::string(who) + ": theta must lie in (0, pi]");
}

}  // namespace

CurrentVector current_exact(const ScatteringParams& p, const FieldPoint& pt) {
  return current_numeric([&](const FieldPoint& q) { return psi_exact(p, q); }, p, pt);
}

CurrentVector current_in_distorted(const ScatteringParams& p, const FieldPoint& pt) {
  check_open_angle(pt.theta(), "current_in_distorted");
  const double g_over_rho = p.gamma / pt.rho();
  const double sin_t = std::sin(pt.theta());
  return {p.k * (std::cos(pt.theta()) + g_over_rho),
          -p.k * (sin_t - g_over_rho * sin_t / pt.s())};
}

CurrentVector current_scattered_asymptotic(const ScatteringParams& p, const FieldPoint& pt) {
  check_open_angle(pt.theta(), "current_scattered_asymptotic");
  const double f2 = std::norm(rutherford_amplitude(p, pt.theta()));
  const double r = pt.rho() / p.k;
  return {p.k * f2 / (r * r), 0.0};
}

CurrentDecomposition current_decomposition_asymptotic(const ScatteringParams& p,
                                                      const FieldPoint& pt, bool backreaction) {
  check_open_angle(pt.theta(), "current_decomposition_asymptotic");
  const double h = default_current_step(pt.rho());
  CurrentDecomposition d;
  d.total = current_numeric(
      [&](const FieldPoint& q) { return psi_asymptotic(p, q, backreaction).total(); }, p, pt, h);
  d.incoming = current_numeric(
      [&](const FieldPoint& q) { return psi_in_distorted(p, q, backreaction); }, p, pt, h);
  d.scattered =
      current_numeric([&](const FieldPoint& q) { return psi_scat_distorted(p, q); }, p, pt, h);
  d.interference = d.total - d.incoming - d.scattered;
  return d;
}

CurrentVector current_outgoing_exact(const ScatteringParams& p, const FieldPoint& pt,
                                     bool subtract_backreaction) {
  check_open_angle(pt.theta(), "current_outgoing_exact");
  return current_numeric(
      [&](const FieldPoint& q) {
        return psi_exact(p, q) - psi_in_distorted(p, q, subtract_backreaction);
      },
      p, pt);
}

double interference_current_leading(const ScatteringParams& p, const FieldPoint& pt) {
  check_open_angle(pt.theta(), "interference_current_leading");
  const double rs = pt.rho_s();
  const double delta0 = specfun::log_gamma_complex({1.0, p.gamma}).imag();
  const double cot_half = 1.0 / std::tan(0.5 * pt.theta());
  return -(p.gamma * p.k / pt.rho()) * cot_half * cot_half *
         std::cos(rs - 2.0 * p.gamma * std::log(rs) + 2.0 * delta0);
}

double oscillation_length(const ScatteringParams& p, const FieldPoint& pt) {
  const double theta = pt.theta();
  if (!(theta > 0.0 && theta < std::numbers::pi))
    throw DomainError("oscillation_length: theta must lie in (0, pi)");
  const double factor = 1.0 - 2.0 * p.gamma / pt.rho_s();
  if (std::abs(factor) < 1e-12)
    throw DomainError("oscillation_length: singular at rho s = 2 gamma");
  return 2.0 * std::numbers::pi / (p.k * std::sin(theta) * factor);
}

}  // namespace rutherford
