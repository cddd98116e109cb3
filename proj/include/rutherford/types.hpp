#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "rutherford/errors.hpp"

namespace rutherford {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Interaction strength gamma = mA/(hbar^2 k) and wavenumber k, in units
/// hbar = m = 1. Negative gamma is attractive.
struct ScatteringParams {
  double gamma = 0.0;
  double k = 1.0;

  ScatteringParams() = default;
  ScatteringParams(double gamma_, double k_) : gamma(gamma_), k(k_) {
    if (!std::isfinite(gamma)) throw DomainError("ScatteringParams: gamma must be finite");
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("ScatteringParams: k must be positive");
  }
};

/// Evaluation site: rho = k r and polar angle theta measured from the
/// incident direction.
class FieldPoint {
 public:
  FieldPoint(double rho, double theta) : rho_(rho), theta_(theta) {
    if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("FieldPoint: rho must be >= 0");
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
      throw DomainError("FieldPoint: theta must lie in [0, pi]");
  }

  /// Builds a point from dimensionless Cartesian coordinates (kx, kz) in the
  /// y = 0 plane.
  static FieldPoint from_cartesian(double kx, double kz) {
    const double rho = std::hypot(kx, kz);
    const double theta = rho > 0.0 ? std::atan2(std::abs(kx), kz) : 0.0;
    return {rho, theta};
  }

  double rho() const { return rho_; }
  double theta() const { return theta_; }
  /// s = 1 - cos(theta), evaluated as 2 sin^2(theta/2) to keep small angles exact.
  double s() const {
    const double h = std::sin(0.5 * theta_);
    return 2.0 * h * h;
  }
  double rho_s() const { return rho_ * s(); }
  /// k z = rho cos(theta) = rho (1 - s).
  double kz() const { return rho_ * std::cos(theta_); }

 private:
  double rho_;
  double theta_;
};

}  // namespace rutherford
