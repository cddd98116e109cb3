#include "rutherford/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace rutherford::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

Complex log_gamma_right(Complex z) {
  const Complex zm = z - 1.0;
  Complex sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (zm + static_cast<double>(i));
  const Complex t = zm + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(sum);
}

// log sin(pi z) for Im z >= 0 without overflow at large imaginary part.
Complex log_sin_pi_upper(Complex z) {
  const Complex w = kPi * z;
  const Complex e2 = std::exp(2.0 * kI * w);
  return -kI * w + Complex(-std::numbers::ln2, 0.5 * kPi) + std::log(1.0 - e2);
}

}  // namespace

Complex log_gamma_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("log_gamma_complex: argument is not finite");
  if (is_pole(z))
    throw PoleError("log_gamma_complex: pole at non-positive integer " + std::to_string(z.real()));
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  const Complex log_sin =
      z.imag() >= 0.0 ? log_sin_pi_upper(z) : std::conj(log_sin_pi_upper(std::conj(z)));
  return std::log(kPi) - log_sin - log_gamma_right(1.0 - z);
}

Complex reciprocal_gamma(Complex z) {
  if (is_pole(z)) return 0.0;
  return std::exp(-log_gamma_complex(z));
}

Complex pochhammer(Complex x, int k) {
  if (k < 0) throw DomainError("pochhammer: k must be >= 0");
  Complex prod = 1.0;
  for (int j = 0; j < k; ++j) prod *= x + static_cast<double>(j);
  return prod;
}

double legendre_p(int ell, double x) {
  if (ell < 0) throw DomainError("legendre_p: ell must be >= 0");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("legendre_p: x outside [-1, 1]");
  LegendreSweep sweep(x);
  while (sweep.ell() < ell) sweep.next();
  return sweep.value();
}

LegendreSweep::LegendreSweep(double x) : x_(x) {}

double LegendreSweep::next() {
  // (l+1) P_{l+1} = (2l+1) x P_l - l P_{l-1}
  const double l = ell_;
  const double p_next = ((2.0 * l + 1.0) * x_ * p_ - l * p_prev_) / (l + 1.0);
  p_prev_ = p_;
  p_ = p_next;
  ++ell_;
  return p_;
}

std::vector<double> legendre_table(int lmax, double x) {
  if (lmax < 0) throw DomainError("legendre_table: lmax must be >= 0");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("legendre_table: x outside [-1, 1]");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(lmax) + 1);
  LegendreSweep sweep(x);
  out.push_back(sweep.value());
  for (int l = 1; l <= lmax; ++l) out.push_back(sweep.next());
  return out;
}

double spherical_bessel_j(int ell, double x) {
  if (ell < 0) throw DomainError("spherical_bessel_j: ell must be >= 0");
  if (!(x >= 0.0)) throw DomainError("spherical_bessel_j: x must be >= 0");
  if (x == 0.0) return ell == 0 ? 1.0 : 0.0;

  if (x < 1.0) {
    // x^l / (2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    double lead = 1.0;
    for (int j = 1; j <= ell; ++j) lead *= x / (2.0 * j + 1.0);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
      term *= -0.5 * x * x / (k * (2.0 * ell + 2.0 * k + 1.0));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return lead * sum;
  }

  const double j0 = std::sin(x) / x;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  if (ell == 0) return j0;
  if (ell == 1) return j1;

  if (x >= ell) {
    double jm = j0;
    double jc = j1;
    for (int n = 1; n < ell; ++n) {
      const double jn = (2.0 * n + 1.0) / x * jc - jm;
      jm = jc;
      jc = jn;
    }
    return jc;
  }

  // Miller: start well above the turning point, recur down, normalize
  // against whichever of j0, j1 is better conditioned.
  const int start = ell + 20 + static_cast<int>(std::sqrt(40.0 * (ell + x)));
  double jp = 0.0;
  double jc = 1.0;
  double at_ell = 0.0;
  double f0 = 0.0;
  double f1 = 0.0;
  for (int n = start; n >= 1; --n) {
    const double jm = (2.0 * n + 1.0) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (n - 1 == ell) at_ell = jc;
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250;
      jp *= 1e-250;
      at_ell *= 1e-250;
    }
    if (n == 1) {
      f0 = jc;
      f1 = jp;
    }
  }
  return std::abs(j0) >= std::abs(j1) ? at_ell * (j0 / f0) : at_ell * (j1 / f1);
}

}  // namespace rutherford::specfun
