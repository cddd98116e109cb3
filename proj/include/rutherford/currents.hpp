#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rutherford/asymptotic.hpp"
#include "rutherford/exact.hpp"
#include "rutherford/types.hpp"

namespace rutherford {

/// Probability current Im[psi* grad psi] (hbar = m = 1) in the (e_r, e_theta)
/// basis. The azimuthal component vanishes by symmetry.
struct CurrentVector {
  double j_r = 0.0;
  double j_theta = 0.0;

  CurrentVector& operator+=(const CurrentVector& o) {
    j_r += o.j_r;
    j_theta += o.j_theta;
    return *this;
  }
  CurrentVector& operator-=(const CurrentVector& o) {
    j_r -= o.j_r;
    j_theta -= o.j_theta;
    return *this;
  }
  friend CurrentVector operator+(CurrentVector a, const CurrentVector& b) { return a += b; }
  friend CurrentVector operator-(CurrentVector a, const CurrentVector& b) { return a -= b; }
  friend CurrentVector operator*(double c, CurrentVector a) { return {c * a.j_r, c * a.j_theta}; }
};

struct CurrentDecomposition {
  CurrentVector total;
  CurrentVector incoming;
  CurrentVector scattered;
  CurrentVector interference;
};

/// h = 1e-4 max(1, rho).
inline double default_current_step(double rho) { return 1e-4 * std::max(1.0, rho); }

namespace detail {
void check_current_step(const ScatteringParams& p, const FieldPoint& pt, double h);
inline double fold_theta(double theta) {
  if (theta < 0.0) return -theta;
  if (theta > std::numbers::pi) return 2.0 * std::numbers::pi - theta;
  return theta;
}
}  // namespace detail

/// J = Im[psi* grad psi] with grad = (k d/drho, (k/rho) d/dtheta), by central
/// differences of an axisymmetric field. The rho step is h, the theta step
/// h / max(1, rho); theta stencils past 0 or pi are folded back.
template <class Field>
CurrentVector current_numeric(Field&& field, const ScatteringParams& p, const FieldPoint& pt,
                              double h) {
  detail::check_current_step(p, pt, h);
  const double rho = pt.rho();
  const double theta = pt.theta();
  const double ht = h / std::max(1.0, rho);
  auto at = [&](double r, double t) -> Complex {
    return field(FieldPoint(r, detail::fold_theta(t)));
  };
  const Complex c = at(rho, theta);
  const Complex d_r = (at(rho + h, theta) - at(rho - h, theta)) / (2.0 * h);
  const Complex d_t = (at(rho, theta + ht) - at(rho, theta - ht)) / (2.0 * ht);
  const Complex cc = std::conj(c);
  return {p.k * (cc * d_r).imag(), p.k / rho * (cc * d_t).imag()};
}

template <class Field>
CurrentVector current_numeric(Field&& field, const ScatteringParams& p, const FieldPoint& pt) {
  return current_numeric(std::forward<Field>(field), p, pt, default_current_step(pt.rho()));
}

/// Current of the exact state.
CurrentVector current_exact(const ScatteringParams& p, const FieldPoint& pt);

/// Closed form for the log-distorted plane wave e^{i kz + i gamma ln(rho s)}:
/// k[(cos theta + gamma/rho) e_r - (sin theta - (gamma/rho) sin theta/(1 - cos theta)) e_theta].
CurrentVector current_in_distorted(const ScatteringParams& p, const FieldPoint& pt);

/// Leading-order scattered current k |f|^2 / r^2 e_r with r = rho/k.
CurrentVector current_scattered_asymptotic(const ScatteringParams& p, const FieldPoint& pt);

/// Currents of the asymptotic field and of its two waves; interference is
/// the remainder total - incoming - scattered.
CurrentDecomposition current_decomposition_asymptotic(const ScatteringParams& p,
                                                      const FieldPoint& pt,
                                                      bool backreaction = true);

/// J[psi_exact - psi_in]: J_out without the back-reaction factor in psi_in,
/// J_{gamma^2 out} with it.
CurrentVector current_outgoing_exact(const ScatteringParams& p, const FieldPoint& pt,
                                     bool subtract_backreaction);

/// Leading radial interference current
/// -(gamma k/rho) cot^2(theta/2) cos(rho s - 2 gamma ln(rho s) + 2 delta_0).
double interference_current_leading(const ScatteringParams& p, const FieldPoint& pt);

/// Orthoradial oscillation length 2 pi / (k sin theta (1 - 2 gamma/(rho s))).
/// Negative where rho s < 2 gamma. DomainError at rho s = 2 gamma and outside (0, pi).
double oscillation_length(const ScatteringParams& p, const FieldPoint& pt);

}  // namespace rutherford
