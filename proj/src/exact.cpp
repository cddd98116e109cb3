#include "rutherford/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rutherford/specfun.hpp"

namespace rutherford {

namespace {

// e^{-pi gamma/2} Gamma(1 + i gamma)
Complex forward_factor(double gamma) {
  return std::exp(-0.5 * std::numbers::pi * gamma + specfun::log_gamma_complex({1.0, gamma}));
}

// psi is a function of cos(theta): reflect stencil points back into [0, pi].
double fold_theta(double theta) {
  if (theta < 0.0) return -theta;
  if (theta > std::numbers::pi) return 2.0 * std::numbers::pi - theta;
  return theta;
}

}  // namespace

Complex psi_exact(const ScatteringParams& p, const FieldPoint& pt) {
  const Complex plane = std::exp(kI * pt.kz());
  if (p.gamma == 0.0) return plane;
  const Complex f = specfun::hyp1f1({Complex(0.0, -p.gamma), 1.0, Complex(0.0, pt.rho_s())});
  return plane * forward_factor(p.gamma) * f;
}

Complex psi_exact_cartesian(const ScatteringParams& p, double kx, double kz) {
  return psi_exact(p, FieldPoint::from_cartesian(kx, kz));
}

double schrodinger_residual(const ScatteringParams& p, const FieldPoint& pt, double h) {
  const double rho = pt.rho();
  if (!(h > 0.0) || !(rho > h))
    throw StepSizeError("schrodinger_residual: need rho > h > 0");
  if (h * std::max(1.0, std::abs(p.gamma) / rho) >= 0.1)
    throw StepSizeError("schrodinger_residual: step too large for the local wavelength");

  const double theta = pt.theta();
  const double ht = h / std::max(1.0, rho);
  auto at = [&](double r, double t) { return psi_exact(p, FieldPoint(r, fold_theta(t))); };

  const Complex c = at(rho, theta);
  const Complex rp = at(rho + h, theta);
  const Complex rm = at(rho - h, theta);
  const Complex tp = at(rho, theta + ht);
  const Complex tm = at(rho, theta - ht);

  const Complex d_rr = (rp - 2.0 * c + rm) / (h * h);
  const Complex d_r = (rp - rm) / (2.0 * h);
  const Complex d_tt = (tp - 2.0 * c + tm) / (ht * ht);
  const Complex d_t = (tp - tm) / (2.0 * ht);

  // Delta_2 psi = psi_tt + cot(theta) psi_t, which tends to 2 psi_tt on the axis.
  const double sin_t = std::sin(theta);
  const Complex sphere = sin_t < 1e-8 ? 2.0 * d_tt : d_tt + std::cos(theta) / sin_t * d_t;

  const Complex residual =
      d_rr + 2.0 / rho * d_r + sphere / (rho * rho) + (1.0 - 2.0 * p.gamma / rho) * c;
  return std::abs(residual) / std::abs(c);
}

double paraboloid_s(double rho) {
  if (!(rho > 0.0)) throw DomainError("paraboloid_s: rho must be positive");
  return 1.0 / rho;
}

double paraboloid_theta(double rho) {
  const double s = paraboloid_s(rho);
  if (s >= 2.0) return std::numbers::pi;
  return std::acos(1.0 - s);
}

double paraboloid_entry_kz(double kx) { return 0.5 * kx * kx - 0.5; }

double forward_amplitude(double gamma) { return std::abs(forward_factor(gamma)); }

Complex psi_small_rhos(const ScatteringParams& p, const FieldPoint& pt) {
  return std::exp(kI * pt.kz()) * forward_factor(p.gamma) * (1.0 + p.gamma * pt.rho_s());
}

Complex psi_forward(const ScatteringParams& p, double rho) {
  return std::exp(kI * rho) * forward_factor(p.gamma);
}

}  // namespace rutherford
