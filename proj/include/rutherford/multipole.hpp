#pragma once

#include <optional>
#include <vector>

#include "rutherford/types.hpp"

namespace rutherford {

/// e^{2 i delta_ell} = Gamma(ell+1+i gamma) / Gamma(ell+1-i gamma).
struct PhaseShiftFactor {
  int ell = 0;
  double gamma = 0.0;
  Complex factor{1.0, 0.0};
  /// arg Gamma(ell+1+i gamma), reduced to (-pi, pi].
  double delta = 0.0;
};

/// One coefficient of a multipole expansion: psi_ell(rho) or a series term a_ell.
struct MultipoleTerm {
  int ell = 0;
  Complex coefficient;
};

/// Single-pass Cesaro (C,1) mean of a series: after n+1 terms holds
/// (1/(n+1)) sum_{k<=n} sigma_k with sigma_k the ordinary partial sums.
class CesaroState {
 public:
  void add(Complex term) {
    partial_ += term;
    sum_of_partials_ += partial_;
    ++count_;
  }
  /// Number of terms consumed (n + 1).
  long count() const { return count_; }
  Complex partial_sum() const { return partial_; }
  Complex value() const {
    return count_ == 0 ? Complex{} : sum_of_partials_ / static_cast<double>(count_);
  }

 private:
  Complex partial_{};
  Complex sum_of_partials_{};
  long count_ = 0;
};

/// Direct evaluation through the complex log-gamma.
PhaseShiftFactor phase_shift(int ell, double gamma);

/// e^{2 i delta_ell} for ell = 0..ell_max, seeded at ell = 0 and advanced with
/// e^{2i delta_{l+1}} = e^{2i delta_l} (l+1+i gamma)/(l+1-i gamma).
std::vector<Complex> phase_shift_factors(double gamma, int ell_max);

/// Largest deviation of the direct factors at ell +- 1 from the up and down
/// recurrences applied to the factor at ell. ell >= 1.
double phase_shift_recurrence_check(int ell, double gamma);

/// Regular Coulomb wave Psi_ell(rho) = C rho^{ell+1} e^{-i rho} 1F1(ell+1-i gamma; 2ell+2; 2i rho)
/// normalized so that Psi_ell/rho -> (2ell+1)/(2i rho)[(-1)^{ell+1} e^{-i rho_c} + e^{2i delta} e^{i rho_c}].
Complex coulomb_wave_regular(int ell, double gamma, double rho);

/// dPsi_ell/drho, from the 1F1 derivative.
Complex coulomb_wave_regular_derivative(int ell, double gamma, double rho);

/// Psi_ell(rho) / rho, finite at rho = 0.
Complex coulomb_wave_regular_over_rho(int ell, double gamma, double rho);

/// Large-rho two-wave form of Psi_ell with rho_c = rho - gamma ln(2 rho).
Complex coulomb_wave_asymptotic(int ell, double gamma, double rho);

/// sum_{ell <= ell_max} (Psi_ell(rho)/rho) P_ell(cos theta). Converges
/// absolutely to psi_exact.
Complex psi_multipole_sum(const ScatteringParams& p, const FieldPoint& pt, int ell_max);

/// a_ell = ((2ell+1)/(2ik)) (e^{2i delta_ell} - 1) P_ell(cos theta).
std::vector<MultipoleTerm> f_series_terms(const ScatteringParams& p, double theta, int ell_max);

/// Ordinary partial sum of the partial-wave amplitude series up to ell_max.
/// The series does not converge (terms grow like sqrt(ell)); it exists as a
/// diagnostic of what summing the large-distance multipole form term by term gives.
Complex f_series_partial_sum(const ScatteringParams& p, double theta, int ell_max);

/// All partial sums sigma_0 ... sigma_{ell_max}.
std::vector<Complex> f_series_partial_sums(const ScatteringParams& p, double theta, int ell_max);

/// n-th Cesaro partial sum of the same series (terms ell = 0..n).
Complex f_series_cesaro(const ScatteringParams& p, double theta, int n);

/// Terms of the reduced series gamma/k e^{2i delta_ell}(ell/(ell+i gamma) - (ell+1)/(ell+1-i gamma)) P_ell.
std::vector<MultipoleTerm> f_reduced_series_terms(const ScatteringParams& p, double theta,
                                                  int ell_max);

/// f from the reduced series: (1/(1 - cos theta)) times the sum of its terms.
Complex f_reduced_series(const ScatteringParams& p, double theta, int ell_max);

/// -(gamma/(k(1-cos theta))) Gamma(1+i gamma)/Gamma(1-i gamma) e^{-i gamma ln(s/2)}.
Complex f_closed_form(const ScatteringParams& p, double theta);

/// Coefficient c_ell of (1 - mu)^{a-1} = sum_ell c_ell P_ell(mu), Re a > 0:
/// 2^{a-1} (2ell+1) Gamma(a) Gamma(ell+1-a) / (Gamma(1-a) Gamma(ell+1+a)).
Complex legendre_power_law_coeff(Complex a, int ell);

/// Plane-wave multipole i^ell (2ell+1) j_ell(rho) and its ell << rho two-wave
/// form (2ell+1)/(2i rho)[(-1)^{ell+1} e^{-i rho} + e^{i rho}] (absent at rho = 0).
struct PlaneWavePartial {
  Complex exact;
  std::optional<Complex> asymptotic;
};
PlaneWavePartial plane_wave_partial(int ell, double rho);

}  // namespace rutherford
