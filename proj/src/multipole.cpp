#include "rutherford/multipole.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rutherford/specfun.hpp"

namespace rutherford {

namespace {

constexpr double kPi = std::numbers::pi;

Complex i_power(int ell) {
  switch (ell % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_series_angle(double theta, const char* who) {
  if (!(theta > 0.0 && theta <= kPi))
    throw DomainError(std::string(who) +
                      ": theta must lie in (0, pi]; the forward-direction delta term is not "
                      "represented");
}

void check_ell(int ell, const char* who) {
  if (ell < 0) throw DomainError(std::string(who) + ": ell must be >= 0");
}

// log of (2l+1)(2i)^l Gamma(l+1+i gamma) e^{-gamma pi/2} / Gamma(2l+2) without the i^l.
Complex log_coulomb_norm(int ell, double gamma) {
  const double l = ell;
  return std::log(2.0 * l + 1.0) + l * std::numbers::ln2 +
         specfun::log_gamma_complex({l + 1.0, gamma}) - 0.5 * kPi * gamma -
         std::lgamma(2.0 * l + 2.0);
}

}  // namespace

PhaseShiftFactor phase_shift(int ell, double gamma) {
  check_ell(ell, "phase_shift");
  const double arg = specfun::log_gamma_complex({ell + 1.0, gamma}).imag();
  return {ell, gamma, std::exp(2.0 * kI * arg), std::remainder(arg, 2.0 * kPi)};
}

std::vector<Complex> phase_shift_factors(double gamma, int ell_max) {
  check_ell(ell_max, "phase_shift_factors");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(ell_max) + 1);
  Complex e = phase_shift(0, gamma).factor;
  out.push_back(e);
  for (int l = 0; l < ell_max; ++l) {
    e *= Complex(l + 1.0, gamma) / Complex(l + 1.0, -gamma);
    e /= std::abs(e);
    out.push_back(e);
  }
  return out;
}

double phase_shift_recurrence_check(int ell, double gamma) {
  if (ell < 1) throw DomainError("phase_shift_recurrence_check: ell must be >= 1");
  const double l = ell;
  const Complex here = phase_shift(ell, gamma).factor;
  const Complex up = phase_shift(ell + 1, gamma).factor;
  const Complex down = phase_shift(ell - 1, gamma).factor;
  const double dev_up = std::abs(up - here * Complex(l + 1.0, gamma) / Complex(l + 1.0, -gamma));
  const double dev_down = std::abs(down - here * Complex(l, -gamma) / Complex(l, gamma));
  return std::max(dev_up, dev_down);
}

Complex coulomb_wave_regular_over_rho(int ell, double gamma, double rho) {
  check_ell(ell, "coulomb_wave_regular");
  if (!(rho >= 0.0)) throw DomainError("coulomb_wave_regular: rho must be >= 0");
  if (rho == 0.0) return ell == 0 ? std::exp(log_coulomb_norm(0, gamma)) : Complex{};
  const double l = ell;
  const Complex f =
      specfun::hyp1f1({Complex(l + 1.0, -gamma), 2.0 * l + 2.0, Complex(0.0, 2.0 * rho)});
  return i_power(ell) * std::exp(log_coulomb_norm(ell, gamma) + l * std::log(rho) - kI * rho) * f;
}

Complex coulomb_wave_regular(int ell, double gamma, double rho) {
  return rho * coulomb_wave_regular_over_rho(ell, gamma, rho);
}

Complex coulomb_wave_regular_derivative(int ell, double gamma, double rho) {
  check_ell(ell, "coulomb_wave_regular_derivative");
  if (!(rho > 0.0)) throw DomainError("coulomb_wave_regular_derivative: rho must be positive");
  const double l = ell;
  const auto f = specfun::hyp1f1_with_derivative(
      {Complex(l + 1.0, -gamma), 2.0 * l + 2.0, Complex(0.0, 2.0 * rho)});
  // d/drho [rho^{l+1} e^{-i rho} F(2i rho)] = rho^l e^{-i rho} [(l+1) F - i rho F + 2i rho F']
  const Complex bracket = (l + 1.0) * f.value - kI * rho * f.value + 2.0 * kI * rho * f.derivative;
  return i_power(ell) * std::exp(log_coulomb_norm(ell, gamma) + l * std::log(rho) - kI * rho) *
         bracket;
}

Complex coulomb_wave_asymptotic(int ell, double gamma, double rho) {
  check_ell(ell, "coulomb_wave_asymptotic");
  if (!(rho > 0.0)) throw DomainError("coulomb_wave_asymptotic: rho must be positive");
  const double rho_c = rho - gamma * std::log(2.0 * rho);
  const double sign = ell % 2 == 0 ? -1.0 : 1.0;  // (-1)^{ell+1}
  const Complex e2 = phase_shift(ell, gamma).factor;
  return (2.0 * ell + 1.0) / (2.0 * kI) *
         (sign * std::exp(-kI * rho_c) + e2 * std::exp(kI * rho_c));
}

Complex psi_multipole_sum(const ScatteringParams& p, const FieldPoint& pt, int ell_max) {
  check_ell(ell_max, "psi_multipole_sum");
  specfun::LegendreSweep leg(std::cos(pt.theta()));
  Complex sum = coulomb_wave_regular_over_rho(0, p.gamma, pt.rho()) * leg.value();
  for (int l = 1; l <= ell_max; ++l) {
    const double pl = leg.next();
    sum += coulomb_wave_regular_over_rho(l, p.gamma, pt.rho()) * pl;
  }
  return sum;
}

std::vector<MultipoleTerm> f_series_terms(const ScatteringParams& p, double theta, int ell_max) {
  check_series_angle(theta, "f_series_terms");
  check_ell(ell_max, "f_series_terms");
  const auto e2 = phase_shift_factors(p.gamma, ell_max);
  specfun::LegendreSweep leg(std::cos(theta));
  std::vector<MultipoleTerm> out;
  out.reserve(e2.size());
  for (int l = 0; l <= ell_max; ++l) {
    const double pl = l == 0 ? leg.value() : leg.next();
    out.push_back({l, (2.0 * l + 1.0) / (2.0 * kI * p.k) * (e2[l] - 1.0) * pl});
  }
  return out;
}

std::vector<Complex> f_series_partial_sums(const ScatteringParams& p, double theta, int ell_max) {
  const auto terms = f_series_terms(p, theta, ell_max);
  std::vector<Complex> sums;
  sums.reserve(terms.size());
  Complex acc{};
  for (const auto& t : terms) {
    acc += t.coefficient;
    sums.push_back(acc);
  }
  return sums;
}

Complex f_series_partial_sum(const ScatteringParams& p, double theta, int ell_max) {
  return f_series_partial_sums(p, theta, ell_max).back();
}

Complex f_series_cesaro(const ScatteringParams& p, double theta, int n) {
  if (n < 1) throw DomainError("f_series_cesaro: n must be >= 1");
  CesaroState state;
  for (const auto& t : f_series_terms(p, theta, n)) state.add(t.coefficient);
  return state.value();
}

std::vector<MultipoleTerm> f_reduced_series_terms(const ScatteringParams& p, double theta,
                                                  int ell_max) {
  check_series_angle(theta, "f_reduced_series");
  check_ell(ell_max, "f_reduced_series");
  const auto e2 = phase_shift_factors(p.gamma, ell_max);
  specfun::LegendreSweep leg(std::cos(theta));
  std::vector<MultipoleTerm> out;
  out.reserve(e2.size());
  const double g = p.gamma;
  for (int l = 0; l <= ell_max; ++l) {
    const double pl = l == 0 ? leg.value() : leg.next();
    const double dl = l;
    const Complex first = l == 0 ? Complex{} : dl / Complex(dl, g);
    const Complex bracket = first - (dl + 1.0) / Complex(dl + 1.0, -g);
    out.push_back({l, g / p.k * e2[l] * bracket * pl});
  }
  return out;
}

Complex f_reduced_series(const ScatteringParams& p, double theta, int ell_max) {
  Complex sum{};
  for (const auto& t : f_reduced_series_terms(p, theta, ell_max)) sum += t.coefficient;
  return sum / (1.0 - std::cos(theta));
}

Complex f_closed_form(const ScatteringParams& p, double theta) {
  check_series_angle(theta, "f_closed_form");
  const double h = std::sin(0.5 * theta);
  const double s = 2.0 * h * h;
  const Complex ratio = std::exp(2.0 * kI * specfun::log_gamma_complex({1.0, p.gamma}).imag());
  return -(p.gamma / (p.k * s)) * ratio * std::exp(-kI * p.gamma * std::log(0.5 * s));
}

Complex legendre_power_law_coeff(Complex a, int ell) {
  check_ell(ell, "legendre_power_law_coeff");
  if (!(a.real() > 0.0))
    throw DomainError("legendre_power_law_coeff: Re(a) must be positive for the expansion to exist");
  // Gamma(a)/Gamma(1+a) = 1/a and Gamma(l+1-a)/Gamma(1-a) / (Gamma(l+1+a)/Gamma(1+a))
  // = prod_{j=1}^{l} (j-a)/(j+a); no gamma poles are touched when a is a positive integer.
  Complex c = std::pow(Complex(2.0), a - 1.0) * (2.0 * ell + 1.0) / a;
  for (int j = 1; j <= ell; ++j) c *= (static_cast<double>(j) - a) / (static_cast<double>(j) + a);
  return c;
}

PlaneWavePartial plane_wave_partial(int ell, double rho) {
  check_ell(ell, "plane_wave_partial");
  PlaneWavePartial out;
  out.exact = i_power(ell) * (2.0 * ell + 1.0) * specfun::spherical_bessel_j(ell, rho);
  if (rho > 0.0) {
    const double sign = ell % 2 == 0 ? -1.0 : 1.0;
    out.asymptotic = (2.0 * ell + 1.0) / (2.0 * kI * rho) *
                     (sign * std::exp(-kI * rho) + std::exp(kI * rho));
  }
  return out;
}

}  // namespace rutherford
