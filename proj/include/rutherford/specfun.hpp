#pragma once

#include <vector>

#include "rutherford/types.hpp"

namespace rutherford::specfun {

/// log Gamma(z) on the branch that is continuous from the positive real axis
/// (imaginary part is not reduced mod 2 pi). Lanczos approximation for
/// Re z >= 1/2, reflection otherwise. Throws PoleError at z = 0, -1, -2, ...
Complex log_gamma_complex(Complex z);

/// 1 / Gamma(z); exactly zero at the poles.
Complex reciprocal_gamma(Complex z);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1) by direct product.
Complex pochhammer(Complex x, int k);

/// Parameters of 1F1(a; b; z). b must not be a non-positive integer.
struct Hyp1F1Params {
  Complex a;
  Complex b;
  Complex z;
};

/// Knobs of the 1F1 dispatcher.
struct Hyp1F1Config {
  /// Plain power series for |z| at or below this radius.
  double series_radius = 8.0;
  /// The large-|z| expansion is tried once |z| > switch_base + switch_slope |a|^2.
  double switch_base = 30.0;
  double switch_slope = 2.0;
  /// Longest step of the Taylor continuation between the two regimes.
  double max_step = 2.0;
  double tol = 1e-16;
  int max_terms = 20000;
};

/// Power series sum_n (a)_n/(b)_n z^n/n!, stopped once three consecutive
/// terms fall below tol |sum|. Throws ConvergenceError past max_terms.
/// Loses roughly exp(|z|) relative accuracy on the imaginary axis; prefer
/// hyp1f1() for |z| beyond a few units.
Complex hyp1f1_series(const Hyp1F1Params& p, double tol, int max_terms = 20000);

/// Two-sum large-|z| expansion truncated at n_terms terms in each sum.
/// The e^{+i pi a} branch is used for Im z >= 0, e^{-i pi a} otherwise.
Complex hyp1f1_asymptotic(const Hyp1F1Params& p, int n_terms);

/// 1F1 and its z-derivative.
struct Hyp1F1Value {
  Complex value;
  Complex derivative;
};

/// Accurate 1F1 over the complex plane: power series near the origin, the
/// asymptotic expansion far out when its smallest term reaches the
/// tolerance, and Taylor continuation of the Kummer equation along the ray
/// from the origin in between.
Hyp1F1Value hyp1f1_with_derivative(const Hyp1F1Params& p, const Hyp1F1Config& cfg = {});

inline Complex hyp1f1(const Hyp1F1Params& p, const Hyp1F1Config& cfg = {}) {
  return hyp1f1_with_derivative(p, cfg).value;
}

/// P_ell(x) by upward Bonnet recurrence. DomainError outside [-1, 1].
double legendre_p(int ell, double x);

/// Incremental Bonnet recurrence for sweeps over ell at fixed x.
class LegendreSweep {
 public:
  explicit LegendreSweep(double x);
  int ell() const { return ell_; }
  double value() const { return p_; }
  /// Advances to ell + 1 and returns the new value.
  double next();

 private:
  double x_;
  int ell_ = 0;
  double p_ = 1.0;
  double p_prev_ = 0.0;
};

/// P_0(x) ... P_lmax(x).
std::vector<double> legendre_table(int lmax, double x);

/// Spherical Bessel j_ell(x) for x >= 0. Miller downward recurrence below
/// the turning point x < ell, upward recurrence above it.
double spherical_bessel_j(int ell, double x);

}  // namespace rutherford::specfun
