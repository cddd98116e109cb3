#include "rutherford/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "rutherford/asymptotic.hpp"
#include "rutherford/classical.hpp"
#include "rutherford/currents.hpp"
#include "rutherford/exact.hpp"
#include "rutherford/multipole.hpp"

#ifndef RUTHERFORD_PRESET_DIR
#define RUTHERFORD_PRESET_DIR "presets"
#endif

namespace rutherford::scan {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_plain(const std::string& token) {
  if (token == "pi") return kPi;
  if (token == "-pi") return -kPi;
  if (token.empty()) throw InvalidSpec("empty number");
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || !std::isfinite(v))
    throw InvalidSpec("not a number: '" + token + "'");
  return v;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw InvalidSpec("not a boolean: '" + v + "'");
}

struct Description {
  const char* name;
  const char* text;
};

constexpr Description kDescriptions[] = {
    {"psi_exact",
     "psi_exact: psi = e^{i rho(1-s)} e^{-pi gamma/2} Gamma(1+i gamma) 1F1(-i gamma; 1; i rho s), "
     "s = 1 - cos theta. Valid everywhere, including theta = 0 and inside the paraboloid rho s = 1."},
    {"psi_asymptotic",
     "psi_asymptotic: incoming e^{ikz + i gamma ln(rho s)}(1 - i gamma^2/(rho s)) plus scattered "
     "-(gamma/(rho s)) Gamma(1+i gamma)/Gamma(1-i gamma) e^{i rho - i gamma ln(rho s)}. "
     "Valid for rho s >> 1 (flagged for rho s > 10); undefined at theta = 0."},
    {"currents",
     "currents: J = Im[psi* grad psi] split into incoming, scattered and interference parts of the "
     "asymptotic field, with the exact current for comparison. Valid for rho s >> 1, theta in (0, pi]."},
    {"cross_section",
     "cross_section: dsigma/dOmega = gamma^2/(4 k^2 sin^4(theta/2)) from the Rutherford amplitude, "
     "the closed-form partial-wave amplitude and the Born amplitude of a screened potential "
     "(mu -> 0). Valid for theta in (0, pi]."},
    {"cesaro",
     "cesaro: (C,1) means of the divergent partial-wave series sum (2l+1)/(2ik)(e^{2i delta_l}-1) "
     "P_l(cos theta), which converge to the closed-form amplitude away from theta = 0 and pi. "
     "Columns include s*f."},
    {"reduced_series",
     "reduced_series: (1 - cos theta) f as the convergent series "
     "(gamma/k) sum e^{2i delta_l}(l/(l+i gamma) - (l+1)/(l+1-i gamma)) P_l(cos theta). "
     "Valid for theta in (0, pi]; convergence slows as theta -> 0."},
    {"diverging_sum",
     "diverging_sum: ordinary partial sums of the partial-wave amplitude series; the terms grow "
     "like sqrt(l), so the sums oscillate with growing amplitude instead of converging."},
    {"field_map",
     "field_map: |psi_exact| on a (kx, kz) grid, with a flag marking the paraboloid rho s < 1 "
     "inside which no incoming/scattered split exists."},
    {"bh_mode",
     "bh_mode: long-wavelength Schwarzschild scalar mode, mapped to the Coulomb problem with "
     "gamma = -2 M omega, k = omega. Valid for l >= 1 with l(l+1) > 12 (M omega)^2; the two-wave "
     "form needs omega r >> l(l+1) + gamma^2. Compared with an adaptive integration of the full "
     "rescaled radial equation started at 10 r_s."},
};

using Row = std::vector<double>;
using Job = std::function<std::vector<Row>()>;

std::vector<double> linear(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  v.back() = b;
  return v;
}

std::vector<double> geometric(double a, double b, int n) {
  std::vector<double> v(n);
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < n; ++i) v[i] = std::exp(la + (lb - la) * i / (n - 1));
  v.front() = a;
  v.back() = b;
  return v;
}

void require_angles(const std::vector<double>& theta, bool allow_zero, const char* what) {
  for (double t : theta) {
    if (t < 0.0 || t > kPi)
      throw InvalidSpec(std::string("theta-range: angles must lie in [0, pi] for ") + what);
    if (!allow_zero && t == 0.0)
      throw InvalidSpec(std::string("theta=0 requested for ") + what +
                        ", which is undefined in the forward direction");
  }
}

void require_positive(const std::vector<double>& v, const char* name) {
  for (double x : v)
    if (!(x > 0.0)) throw InvalidSpec(std::string(name) + ": values must be positive");
}

void require_nonnegative(const std::vector<double>& v, const char* name) {
  for (double x : v)
    if (!(x >= 0.0)) throw InvalidSpec(std::string(name) + ": values must be >= 0");
}

template <class T>
void require_nonempty(const std::vector<T>& v, const char* name) {
  if (v.empty()) throw InvalidSpec(std::string(name) + ": empty grid");
}

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

const std::vector<std::string>& quantity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& d : kDescriptions) n.emplace_back(d.name);
    return n;
  }();
  return names;
}

Quantity parse_quantity(const std::string& name) {
  const auto& names = quantity_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    std::string msg = "unknown quantity '" + name + "'; valid names:";
    for (const auto& n : names) msg += " " + n;
    throw InvalidSpec(msg);
  }
  return static_cast<Quantity>(it - names.begin());
}

std::string quantity_name(Quantity q) { return quantity_names().at(static_cast<std::size_t>(q)); }

std::string describe(const std::string& name) {
  return kDescriptions[static_cast<std::size_t>(parse_quantity(name))].text;
}

double parse_number(const std::string& raw) {
  const std::string token = trim(raw);
  if (const auto star = token.find('*'); star != std::string::npos)
    return parse_plain(trim(token.substr(0, star))) * parse_plain(trim(token.substr(star + 1)));
  if (const auto slash = token.find('/'); slash != std::string::npos) {
    const double den = parse_plain(trim(token.substr(slash + 1)));
    if (den == 0.0) throw InvalidSpec("division by zero in '" + token + "'");
    return parse_plain(trim(token.substr(0, slash))) / den;
  }
  return parse_plain(token);
}

std::vector<double> parse_grid(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw InvalidSpec("empty grid specification");
  if (t.find(':') != std::string::npos) {
    const auto parts = split(t, ':');
    if (parts.size() != 3 && parts.size() != 4)
      throw InvalidSpec("grid '" + t + "': expected A:B:N or A:B:N:log");
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const double nn = parse_plain(parts[2]);
    if (nn != std::floor(nn) || nn < 2.0 || nn > 1e7)
      throw InvalidSpec("grid '" + t + "': sample count must be an integer >= 2");
    if (!(a < b)) throw InvalidSpec("grid '" + t + "': range must be ordered, A < B");
    const int n = static_cast<int>(nn);
    if (parts.size() == 4) {
      if (parts[3] != "log") throw InvalidSpec("grid '" + t + "': unknown spacing '" + parts[3] + "'");
      if (!(a > 0.0)) throw InvalidSpec("grid '" + t + "': log spacing needs A > 0");
      return geometric(a, b, n);
    }
    return linear(a, b, n);
  }
  std::vector<double> out;
  for (const auto& p : split(t, ',')) out.push_back(parse_number(p));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_grid(text)) {
    if (v != std::floor(v) || std::abs(v) > 1e8)
      throw InvalidSpec("expected integers in '" + text + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void apply_setting(ScanSpec& spec, const std::string& key_raw, const std::string& value_raw) {
  const std::string key = trim(key_raw);
  const std::string value = trim(value_raw);
  if (key == "quantity") spec.quantity = parse_quantity(value);
  else if (key == "gamma") spec.gamma = parse_number(value);
  else if (key == "k") spec.k = parse_number(value);
  else if (key == "mass") spec.mass = parse_number(value);
  else if (key == "omega") spec.omega = parse_number(value);
  else if (key == "mu") spec.mu = parse_number(value);
  else if (key == "rho-range") spec.rho = parse_grid(value);
  else if (key == "theta-range") spec.theta = parse_grid(value);
  else if (key == "kx-range") spec.kx = parse_grid(value);
  else if (key == "kz-range") spec.kz = parse_grid(value);
  else if (key == "r-range") spec.r = parse_grid(value);
  else if (key == "ell-max") spec.ell_max = parse_int_list(value);
  else if (key == "cesaro-n") spec.cesaro_n = parse_int_list(value);
  else if (key == "ell") spec.ell = parse_int_list(value);
  else if (key == "backreaction") spec.backreaction = parse_bool(value);
  else if (key == "classical-cross-section") spec.classical_cross_section = parse_bool(value);
  else if (key == "out") spec.out = value;
  else throw InvalidSpec("unknown setting '" + key + "'");
}

std::vector<std::pair<std::string, std::string>> read_preset(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidSpec("cannot open preset " + file.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidSpec(file.string() + ":" + std::to_string(lineno) + ": expected key = value");
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

std::filesystem::path preset_directory() {
  if (const char* env = std::getenv("SCATTER_PRESET_DIR"); env && *env) return env;
  return RUTHERFORD_PRESET_DIR;
}

std::filesystem::path preset_path(const std::string& name) {
  if (name.find('/') != std::string::npos || name.find('.') != std::string::npos)
    return name;
  return preset_directory() / (name + ".ini");
}

void finalize(ScanSpec& spec) {
  if (!std::isfinite(spec.gamma)) throw InvalidSpec("gamma must be finite");
  if (!(spec.k > 0.0)) throw InvalidSpec("k must be positive");
  const auto theta_default = [&](const std::string& g) {
    if (spec.theta.empty()) spec.theta = parse_grid(g);
  };
  switch (spec.quantity) {
    case Quantity::psi_exact:
      theta_default("0:pi:181");
      require_angles(spec.theta, true, "psi_exact");
      require_nonnegative(spec.rho, "rho-range");
      break;
    case Quantity::psi_asymptotic:
      theta_default("0.01:pi:300");
      require_angles(spec.theta, false, "an asymptotic quantity (psi_asymptotic)");
      require_positive(spec.rho, "rho-range");
      break;
    case Quantity::currents:
      theta_default("0.05:pi:200");
      require_angles(spec.theta, false, "an asymptotic quantity (currents)");
      require_positive(spec.rho, "rho-range");
      for (double rho : spec.rho) {
        const double h = default_current_step(rho);
        if (!(rho > h) || h * std::max(1.0, std::abs(spec.gamma) / rho) >= 0.1)
          throw InvalidSpec("currents: rho too small for the finite-difference step");
      }
      break;
    case Quantity::cross_section:
      theta_default("0.05:pi:100");
      require_angles(spec.theta, false, "cross_section");
      if (!(spec.mu >= 0.0)) throw InvalidSpec("mu must be >= 0");
      break;
    case Quantity::cesaro:
      theta_default("0.01:pi:200:log");
      require_angles(spec.theta, false, "cesaro");
      for (int n : spec.cesaro_n)
        if (n < 1) throw InvalidSpec("cesaro-n: values must be >= 1");
      require_nonempty(spec.cesaro_n, "cesaro-n");
      break;
    case Quantity::reduced_series:
      theta_default("0.01:pi:200:log");
      require_angles(spec.theta, false, "reduced_series");
      for (int l : spec.ell_max)
        if (l < 0) throw InvalidSpec("ell-max: values must be >= 0");
      require_nonempty(spec.ell_max, "ell-max");
      break;
    case Quantity::diverging_sum:
      theta_default("2");
      require_angles(spec.theta, false, "diverging_sum");
      for (int l : spec.ell_max)
        if (l < 0) throw InvalidSpec("ell-max: values must be >= 0");
      require_nonempty(spec.ell_max, "ell-max");
      break;
    case Quantity::field_map:
      if (spec.kx.empty()) spec.kx = parse_grid("-40:40:81");
      if (spec.kz.empty()) spec.kz = parse_grid("-40:80:121");
      break;
    case Quantity::bh_mode:
      if (!(spec.mass >= 0.0)) throw InvalidSpec("mass must be >= 0");
      if (!(spec.omega > 0.0)) throw InvalidSpec("omega must be positive");
      require_nonempty(spec.ell, "ell");
      for (int l : spec.ell)
        if (l < 1)
          throw InvalidSpec("ell=" + std::to_string(l) +
                            " is outside the domain of the long-wavelength Coulomb mapping (ell >= 1)");
      if (spec.classical_cross_section) {
        theta_default("0.05:pi:100");
        require_angles(spec.theta, false, "the classical cross-section");
      } else {
        if (spec.r.empty()) spec.r = parse_grid("100:500:5");
        for (double r : spec.r)
          if (!(r > 20.0 * spec.mass) || !(r > 0.0))
            throw InvalidSpec("r-range: radii must exceed the integrator start 10 r_s");
      }
      break;
  }
  if (spec.classical_cross_section && spec.quantity != Quantity::bh_mode)
    throw InvalidSpec("classical-cross-section only applies to bh_mode");
  if (spec.quantity == Quantity::bh_mode && spec.mass == 0.0 && !spec.classical_cross_section)
    throw InvalidSpec("bh_mode needs mass > 0 to place the integrator start at 10 r_s");
  require_nonempty(spec.rho, "rho-range");
}

namespace {

struct Plan {
  std::vector<std::string> header;
  std::vector<Job> jobs;
};

Plan plan_scan(const ScanSpec& spec) {
  Plan plan;
  const ScatteringParams p(spec.gamma, spec.k);
  auto one = [](Row r) { return std::vector<Row>{std::move(r)}; };

  switch (spec.quantity) {
    case Quantity::psi_exact:
      plan.header = {"rho", "theta", "re_psi", "im_psi", "abs_psi"};
      for (double rho : spec.rho)
        for (double th : spec.theta)
          plan.jobs.emplace_back([=] {
            const Complex v = psi_exact(p, FieldPoint(rho, th));
            return one({rho, th, v.real(), v.imag(), std::abs(v)});
          });
      break;

    case Quantity::psi_asymptotic:
      plan.header = {"rho",         "theta",       "rho_s",        "re_psi_exact", "im_psi_exact",
                     "abs_psi_exact", "re_psi_asym", "im_psi_asym", "abs_psi_asym", "valid"};
      for (double rho : spec.rho)
        for (double th : spec.theta)
          plan.jobs.emplace_back([=, br = spec.backreaction] {
            const FieldPoint pt(rho, th);
            const Complex e = psi_exact(p, pt);
            const auto a = psi_asymptotic(p, pt, br);
            const Complex t = a.total();
            return one({rho, th, pt.rho_s(), e.real(), e.imag(), std::abs(e), t.real(), t.imag(),
                        std::abs(t), a.valid ? 1.0 : 0.0});
          });
      break;

    case Quantity::currents:
      plan.header = {"rho",        "theta",        "j_r_exact",          "j_theta_exact",
                     "j_r_total",  "j_r_in",       "j_r_scat",           "j_r_interf",
                     "j_theta_total", "j_theta_in", "j_theta_scat",      "j_theta_interf",
                     "j_r_interf_leading", "j_r_out", "j_r_gamma2_out",  "j_r_scat_leading"};
      for (double rho : spec.rho)
        for (double th : spec.theta)
          plan.jobs.emplace_back([=, br = spec.backreaction] {
            const FieldPoint pt(rho, th);
            const auto ex = current_exact(p, pt);
            const auto d = current_decomposition_asymptotic(p, pt, br);
            return one({rho, th, ex.j_r, ex.j_theta, d.total.j_r, d.incoming.j_r, d.scattered.j_r,
                        d.interference.j_r, d.total.j_theta, d.incoming.j_theta,
                        d.scattered.j_theta, d.interference.j_theta,
                        interference_current_leading(p, pt),
                        current_outgoing_exact(p, pt, false).j_r,
                        current_outgoing_exact(p, pt, true).j_r,
                        current_scattered_asymptotic(p, pt).j_r});
          });
      break;

    case Quantity::cross_section:
      plan.header = {"theta", "dsigma_domega", "abs_f_rutherford_sq", "abs_f_closed_sq",
                     "abs_f_born_sq"};
      for (double th : spec.theta)
        plan.jobs.emplace_back([=, mu = spec.mu] {
          return one({th, differential_cross_section(p, th),
                      std::norm(rutherford_amplitude(p, th)), std::norm(f_closed_form(p, th)),
                      std::norm(born_amplitude_yukawa(p, th, mu))});
        });
      break;

    case Quantity::cesaro:
      plan.header = {"n",       "theta",   "s",         "re_f",          "im_f",   "abs_f",
                     "re_s_f",  "im_s_f",  "abs_s_f",   "abs_s_f_closed", "rel_err"};
      for (int n : spec.cesaro_n)
        for (double th : spec.theta)
          plan.jobs.emplace_back([=] {
            const double s = FieldPoint(1.0, th).s();
            const Complex f = f_series_cesaro(p, th, n);
            const Complex c = f_closed_form(p, th);
            return one({static_cast<double>(n), th, s, f.real(), f.imag(), std::abs(f),
                        s * f.real(), s * f.imag(), s * std::abs(f), s * std::abs(c),
                        rel_err(f, c)});
          });
      break;

    case Quantity::reduced_series:
      plan.header = {"ell_max", "theta",  "re_f",         "im_f",        "abs_f",
                     "re_f_closed", "im_f_closed", "abs_f_closed", "rel_err"};
      for (int lm : spec.ell_max)
        for (double th : spec.theta)
          plan.jobs.emplace_back([=] {
            const Complex f = f_reduced_series(p, th, lm);
            const Complex c = f_closed_form(p, th);
            return one({static_cast<double>(lm), th, f.real(), f.imag(), std::abs(f), c.real(),
                        c.imag(), std::abs(c), rel_err(f, c)});
          });
      break;

    case Quantity::diverging_sum: {
      plan.header = {"theta", "ell", "re_partial", "im_partial", "abs_partial", "abs_f_closed"};
      const int lmax = *std::max_element(spec.ell_max.begin(), spec.ell_max.end());
      for (double th : spec.theta)
        plan.jobs.emplace_back([=] {
          const auto sums = f_series_partial_sums(p, th, lmax);
          const double c = std::abs(f_closed_form(p, th));
          std::vector<Row> rows;
          rows.reserve(sums.size());
          for (std::size_t l = 0; l < sums.size(); ++l)
            rows.push_back({th, static_cast<double>(l), sums[l].real(), sums[l].imag(),
                            std::abs(sums[l]), c});
          return rows;
        });
      break;
    }

    case Quantity::field_map:
      plan.header = {"kx", "kz", "rho", "theta", "re_psi", "im_psi", "abs_psi", "inside_paraboloid"};
      for (double kx : spec.kx)
        for (double kz : spec.kz)
          plan.jobs.emplace_back([=] {
            const FieldPoint pt = FieldPoint::from_cartesian(kx, kz);
            const Complex v = psi_exact(p, pt);
            return one({kx, kz, pt.rho(), pt.theta(), v.real(), v.imag(), std::abs(v),
                        inside_paraboloid(pt) ? 1.0 : 0.0});
          });
      break;

    case Quantity::bh_mode: {
      const BlackHoleParams bh(spec.mass, spec.omega);
      if (spec.classical_cross_section) {
        const ScatteringParams red = coulomb_reduction(bh);
        plan.header = {"theta", "abs_f_sq"};
        for (double th : spec.theta)
          plan.jobs.emplace_back([=] { return one({th, std::norm(rutherford_amplitude(red, th))}); });
        break;
      }
      plan.header = {"ell",          "r",           "long_wavelength_valid", "re_u_coulomb",
                     "im_u_coulomb", "re_u_asym",   "im_u_asym",   "asym_valid",
                     "re_u_integrated", "im_u_integrated", "rel_dev_integrated"};
      for (int l : spec.ell)
        for (double r : spec.r)
          plan.jobs.emplace_back([=] {
            const Complex c = radial_mode_coulomb(bh, l, r);
            const bool lw = long_wavelength_valid(bh, l);
            Complex a(std::nan(""), std::nan(""));
            bool asym_ok = false;
            try {
              a = radial_mode_asymptotic(bh, l, r);
              asym_ok = true;
            } catch (const DomainError&) {
            }
            const Complex u = integrate_radial_mode(bh, l, r).ubar_over_rho;
            return one({static_cast<double>(l), r, lw ? 1.0 : 0.0, c.real(), c.imag(), a.real(),
                        a.imag(), asym_ok ? 1.0 : 0.0, u.real(), u.imag(), rel_err(u, c)});
          });
      break;
    }
  }
  return plan;
}

}  // namespace

Table run_scan(const ScanSpec& spec_in, unsigned threads) {
  ScanSpec spec = spec_in;
  finalize(spec);
  Plan plan = plan_scan(spec);
  const std::size_t n = plan.jobs.size();
  std::vector<std::vector<Row>> results(n);
  std::vector<std::exception_ptr> errors(n);

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      try {
        results[i] = plan.jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Table table;
  table.header = std::move(plan.header);
  for (auto& block : results)
    for (auto& row : block) table.rows.push_back(std::move(row));
  return table;
}

unsigned thread_count_from_env() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SCATTER_THREADS"); env && *env) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (*end == '\0' && cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

}  // namespace rutherford::scan
