#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library: 1F1 and log-gamma are evaluated in extended
// precision with Boost.Multiprecision, integrals by Boost quadrature.

#include <boost/math/quadrature/sinh_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using BigComplex = boost::multiprecision::cpp_complex<160>;
using BigReal = BigComplex::value_type;

inline BigComplex to_big(Complex z) { return BigComplex(BigReal(z.real()), BigReal(z.imag())); }

inline Complex to_double(const BigComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// Sum of the 1F1 power series carried out in 160 decimal digits, enough to
/// absorb the exp(|z|) cancellation for |z| up to about 300.
inline Complex hyp1f1(Complex a, Complex b, Complex z) {
  const BigComplex A = to_big(a), B = to_big(b), Z = to_big(z);
  BigComplex term(1), sum(1);
  const BigReal eps("1e-60");
  int small = 0;
  for (int n = 0; n < 200000; ++n) {
    term *= (A + BigReal(n)) / (B + BigReal(n)) * Z / BigReal(n + 1);
    sum += term;
    if (n > std::abs(z) && abs(term) < eps * abs(sum)) {
      if (++small >= 5) return to_double(sum);
    } else {
      small = 0;
    }
  }
  throw std::runtime_error("oracle::hyp1f1 did not converge");
}

/// log Gamma(z) for Re z > 0: shift up by recurrence, then Stirling with
/// 20 Bernoulli terms, all in extended precision. The branch is the one
/// continuous from the positive real axis.
inline Complex log_gamma(Complex z) {
  if (!(z.real() > 0.0)) throw std::invalid_argument("oracle::log_gamma needs Re z > 0");
  static const char* bernoulli[] = {
      "0.16666666666666666666666666666666666666666666666667",  // B2
      "-0.033333333333333333333333333333333333333333333333333",
      "0.023809523809523809523809523809523809523809523809524",
      "-0.033333333333333333333333333333333333333333333333333",
      "0.075757575757575757575757575757575757575757575757576",
      "-0.25311355311355311355311355311355311355311355311355",
      "1.1666666666666666666666666666666666666666666666667",
      "-7.0921568627450980392156862745098039215686274509804",
      "54.971177944862155388471177944862155388471177944862",
      "-529.12424242424242424242424242424242424242424242424",
      "6192.1231884057971014492753623188405797101449275362",
      "-86580.253113553113553113553113553113553113553113553",
      "1425517.1666666666666666666666666666666666666666667",
      "-27298231.067816091954022988505747126436781609195402",
      "601580873.90064236838430386817483591677140064236838",
      "-15116315767.092156862745098039215686274509803921569",
      "429614643061.16666666666666666666666666666666666667",
      "-13711655205088.332772159087948561632772159087948562",
      "488332318973593.16666666666666666666666666666666667",
      "-19296579341940068.148632668144863266814486326681449",
  };
  BigComplex w = to_big(z);
  BigComplex shift(0);
  while (abs(w) < 60) {
    shift += log(w);
    w += BigReal(1);
  }
  const BigReal pi = boost::multiprecision::default_ops::get_constant_pi<BigReal::backend_type>();
  BigComplex s = (w - BigReal("0.5")) * log(w) - w + log(BigReal(2) * pi) / BigReal(2);
  BigComplex wpow = w;
  const BigComplex w2 = w * w;
  for (int k = 1; k <= 20; ++k) {
    s += BigReal(bernoulli[k - 1]) / (BigReal(2 * k) * BigReal(2 * k - 1) * wpow);
    wpow *= w2;
  }
  return to_double(s - shift);
}

/// Gamma(1 + i gamma) from the Euler integral int_0^inf t^{i gamma} e^{-t} dt,
/// taken over u = ln t so the integrand is smooth on the whole line.
inline Complex gamma_one_plus_i(double gamma) {
  boost::math::quadrature::sinh_sinh<double> integrator;
  auto weight = [](double u) { return u > 700.0 ? 0.0 : std::exp(u - std::exp(u)); };
  const double re = integrator.integrate([&](double u) { return weight(u) * std::cos(gamma * u); });
  const double im = integrator.integrate([&](double u) { return weight(u) * std::sin(gamma * u); });
  return {re, im};
}

/// int_{-1}^{1} f(x, xc) dx with endpoint singularities allowed; xc is the
/// distance to the nearer endpoint as supplied by tanh-sinh.
template <class F>
double integrate_pm1(F f) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, -1.0, 1.0);
}

/// Least-squares slope of log|y| against log x.
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
