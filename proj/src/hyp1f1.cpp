#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "rutherford/specfun.hpp"

namespace rutherford::specfun {

namespace {

bool nonpositive_integer(Complex b) {
  return b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::round(b.real());
}

void check_params(const Hyp1F1Params& p, const char* who) {
  if (nonpositive_integer(p.b))
    throw DomainError(std::string(who) + ": b must not be a non-positive integer");
  for (Complex v : {p.a, p.b, p.z})
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError(std::string(who) + ": non-finite parameter");
}

// Value and derivative from the same power series. F' = sum n t_n / z.
Hyp1F1Value series_with_derivative(const Hyp1F1Params& p, double tol, int max_terms) {
  Complex term = 1.0;
  Complex sum = 1.0;
  Complex dsum = 0.0;
  int small = 0;
  for (int n = 0; n < max_terms; ++n) {
    const double dn = n;
    // t_{n+1} = t_n (a+n) z / ((b+n)(n+1))
    term *= (p.a + dn) * p.z / ((p.b + dn) * (dn + 1.0));
    sum += term;
    dsum += (dn + 1.0) * term;
    small = std::abs(term) <= tol * std::abs(sum) ? small + 1 : 0;
    if (small >= 3) {
      const Complex deriv = p.z == 0.0 ? p.a / p.b : dsum / p.z;
      return {sum, deriv};
    }
  }
  throw ConvergenceError("hyp1f1_series: no convergence after " + std::to_string(max_terms) +
                         " terms");
}

struct AsymptoticPrefactors {
  Complex exp_branch;   // multiplies sum_k (b-a)_k (1-a)_k / (k! q^k)
  Complex alg_branch;   // multiplies sum_k (a)_k (a-b+1)_k / (k! (-q)^k)
};

AsymptoticPrefactors asymptotic_prefactors(const Hyp1F1Params& p) {
  const Complex log_q = std::log(p.z);
  const Complex log_gamma_b = log_gamma_complex(p.b);
  const double sign = p.z.imag() >= 0.0 ? 1.0 : -1.0;
  AsymptoticPrefactors pre{0.0, 0.0};
  if (!nonpositive_integer(p.a))
    pre.exp_branch = std::exp(p.z + (p.a - p.b) * log_q + log_gamma_b - log_gamma_complex(p.a));
  const Complex bma = p.b - p.a;
  if (!nonpositive_integer(bma))
    pre.alg_branch = std::exp(sign * std::numbers::pi * kI * p.a - p.a * log_q + log_gamma_b -
                              log_gamma_complex(bma));
  return pre;
}

// Sums both asymptotic series until their terms drop below tol relative to
// the total; nullopt if the terms start growing first.
std::optional<Complex> asymptotic_adaptive(const Hyp1F1Params& p, double tol, int max_terms) {
  const auto pre = asymptotic_prefactors(p);
  Complex t1 = pre.exp_branch;
  Complex t2 = pre.alg_branch;
  Complex total = t1 + t2;
  double prev1 = std::abs(t1);
  double prev2 = std::abs(t2);
  bool done1 = prev1 == 0.0;
  bool done2 = prev2 == 0.0;
  for (int k = 0; k < max_terms; ++k) {
    const double dk = k;
    if (!done1) {
      t1 *= (p.b - p.a + dk) * (1.0 - p.a + dk) / ((dk + 1.0) * p.z);
      const double m = std::abs(t1);
      if (m > prev1 && m > tol * std::abs(total)) return std::nullopt;
      total += t1;
      prev1 = m;
      done1 = m <= tol * std::abs(total);
    }
    if (!done2) {
      t2 *= (p.a + dk) * (p.a - p.b + 1.0 + dk) / ((dk + 1.0) * (-p.z));
      const double m = std::abs(t2);
      if (m > prev2 && m > tol * std::abs(total)) return std::nullopt;
      total += t2;
      prev2 = m;
      done2 = m <= tol * std::abs(total);
    }
    if (done1 && done2) return total;
  }
  return std::nullopt;
}

// One Taylor step of the Kummer equation z F'' + (b - z) F' - a F = 0 from
// z0 to z0 + h. With d_n = c_n h^n the local coefficients obey
// z0 (n+1)(n+2) d_{n+2} = (n+a) h^2 d_n - (n+1)(n+b-z0) h d_{n+1}.
Hyp1F1Value taylor_step(const Hyp1F1Params& p, Complex z0, Hyp1F1Value at, Complex h,
                        double tol, int max_terms) {
  Complex d0 = at.value;
  Complex d1 = at.derivative * h;
  Complex value = d0 + d1;
  Complex dvalue = d1;  // sum n d_n, divided by h at the end
  int small = 0;
  for (int n = 0; n < max_terms; ++n) {
    const double dn = n;
    const Complex d2 = ((dn + p.a) * h * h * d0 - (dn + 1.0) * (dn + p.b - z0) * h * d1) /
                       (z0 * (dn + 1.0) * (dn + 2.0));
    value += d2;
    dvalue += (dn + 2.0) * d2;
    const double scale = std::abs(value) + std::abs(dvalue);
    small = std::abs(d2) * (dn + 3.0) <= tol * scale ? small + 1 : 0;
    if (small >= 3) return {value, dvalue / h};
    d0 = d1;
    d1 = d2;
  }
  throw ConvergenceError("hyp1f1: Taylor continuation did not converge");
}

}  // namespace

Complex hyp1f1_series(const Hyp1F1Params& p, double tol, int max_terms) {
  check_params(p, "hyp1f1_series");
  if (!(tol > 0.0)) throw DomainError("hyp1f1_series: tol must be positive");
  return series_with_derivative(p, tol, max_terms).value;
}

Complex hyp1f1_asymptotic(const Hyp1F1Params& p, int n_terms) {
  check_params(p, "hyp1f1_asymptotic");
  if (n_terms < 1) throw DomainError("hyp1f1_asymptotic: n_terms must be >= 1");
  if (p.z == 0.0) throw DomainError("hyp1f1_asymptotic: z must be nonzero");
  const auto pre = asymptotic_prefactors(p);
  Complex s1 = 0.0;
  Complex s2 = 0.0;
  Complex t1 = 1.0;
  Complex t2 = 1.0;
  for (int k = 0; k < n_terms; ++k) {
    const double dk = k;
    s1 += t1;
    s2 += t2;
    t1 *= (p.b - p.a + dk) * (1.0 - p.a + dk) / ((dk + 1.0) * p.z);
    t2 *= (p.a + dk) * (p.a - p.b + 1.0 + dk) / ((dk + 1.0) * (-p.z));
  }
  return pre.exp_branch * s1 + pre.alg_branch * s2;
}

Hyp1F1Value hyp1f1_with_derivative(const Hyp1F1Params& p, const Hyp1F1Config& cfg) {
  check_params(p, "hyp1f1");
  const double r = std::abs(p.z);
  if (r <= cfg.series_radius) return series_with_derivative(p, cfg.tol, cfg.max_terms);

  const double a2 = std::norm(p.a);
  if (r > cfg.switch_base + cfg.switch_slope * a2) {
    const double asym_tol = 8.0 * cfg.tol;
    if (auto f = asymptotic_adaptive(p, asym_tol, cfg.max_terms)) {
      // d/dz 1F1(a; b; z) = (a/b) 1F1(a+1; b+1; z)
      if (p.a == 0.0) return {*f, 0.0};
      if (auto g = asymptotic_adaptive({p.a + 1.0, p.b + 1.0, p.z}, asym_tol, cfg.max_terms))
        return {*f, p.a / p.b * *g};
    }
  }

  // Continue from the series disk outward along the ray to z.
  const Complex dir = p.z / r;
  Complex z0 = dir * cfg.series_radius;
  Hyp1F1Value at = series_with_derivative({p.a, p.b, z0}, cfg.tol, cfg.max_terms);
  const double span = r - cfg.series_radius;
  const double max_step = std::min(cfg.max_step, 0.5 * cfg.series_radius);
  const int steps = static_cast<int>(std::ceil(span / max_step));
  const Complex h = dir * (span / steps);
  for (int i = 0; i < steps; ++i) {
    at = taylor_step(p, z0, at, h, cfg.tol, cfg.max_terms);
    z0 = i + 1 == steps ? p.z : z0 + h;
  }
  return at;
}

}  // namespace rutherford::specfun
