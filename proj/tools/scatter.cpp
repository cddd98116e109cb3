// scatter: CSV front end for the rutherford library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rutherford/errors.hpp"
#include "rutherford/scan.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

namespace rs = rutherford::scan;

int run_describe(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: scatter describe <quantity>\n";
    return kExitInvalid;
  }
  try {
    std::cout << rs::describe(argv[2]) << '\n';
  } catch (const rs::InvalidSpec& e) {
    std::cerr << "scatter: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc >= 2 && std::string(argv[1]) == "describe") return run_describe(argc, argv);

  CLI::App app{"Coulomb scattering datasets as CSV.\n"
               "Run 'scatter describe <quantity>' for the governing relation of a quantity."};
  app.name("scatter");

  std::string quantity;
  app.add_option("quantity", quantity, "psi_exact | psi_asymptotic | currents | cross_section | "
                                       "cesaro | reduced_series | diverging_sum | field_map | bh_mode");

  // Explicit flags override preset values, so every option is kept as text
  // and applied after the preset in a fixed order.
  const std::vector<std::pair<std::string, std::string>> keyed = {
      {"gamma", "interaction strength gamma"},
      {"k", "wavenumber k"},
      {"mass", "black-hole mass M (bh_mode)"},
      {"omega", "frequency omega (bh_mode)"},
      {"mu", "screening mass of the Born amplitude (cross_section)"},
      {"rho-range", "rho grid: A:B:N, A:B:N:log, list or value"},
      {"theta-range", "theta grid, 'pi' accepted"},
      {"kx-range", "kx grid (field_map)"},
      {"kz-range", "kz grid (field_map)"},
      {"r-range", "radial grid r (bh_mode)"},
      {"ell-max", "ell_max list (reduced_series, diverging_sum)"},
      {"cesaro-n", "Cesaro orders n (cesaro)"},
      {"ell", "multipole list (bh_mode)"},
  };
  std::vector<std::string> values(keyed.size());
  std::vector<CLI::Option*> options;
  for (std::size_t i = 0; i < keyed.size(); ++i)
    options.push_back(app.add_option("--" + keyed[i].first, values[i], keyed[i].second));

  std::optional<bool> backreaction;
  app.add_flag("--backreaction,!--no-backreaction", backreaction,
               "keep the 1 - i gamma^2/(rho s) factor on the incoming wave (default on)");
  bool classical_xs = false;
  app.add_flag("--classical-cross-section", classical_xs,
               "bh_mode: emit |f|^2 of the reduced problem, acknowledging it is not a classical observable");
  std::string preset;
  app.add_option("--preset", preset, "named preset (fig1 ... fig7) or path to a preset file");
  std::string out;
  app.add_option("--out", out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  rs::ScanSpec spec;
  try {
    bool have_quantity = false;
    if (!preset.empty()) {
      for (const auto& [key, value] : rs::read_preset(rs::preset_path(preset))) {
        rs::apply_setting(spec, key, value);
        have_quantity = have_quantity || key == "quantity";
      }
    }
    if (!quantity.empty()) {
      spec.quantity = rs::parse_quantity(quantity);
      have_quantity = true;
    }
    if (!have_quantity) throw rs::InvalidSpec("no quantity given (positional argument or preset)");
    for (std::size_t i = 0; i < keyed.size(); ++i)
      if (options[i]->count() > 0) rs::apply_setting(spec, keyed[i].first, values[i]);
    if (backreaction) spec.backreaction = *backreaction;
    if (classical_xs) spec.classical_cross_section = true;
    if (!out.empty()) spec.out = out;
    rs::finalize(spec);
  } catch (const rs::InvalidSpec& e) {
    std::cerr << "scatter: invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const rutherford::DomainError& e) {
    std::cerr << "scatter: invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  }

  rs::Table table;
  try {
    table = rs::run_scan(spec, rs::thread_count_from_env());
  } catch (const rs::InvalidSpec& e) {
    std::cerr << "scatter: invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const rutherford::DomainError& e) {
    std::cerr << "scatter: invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const rutherford::StepSizeError& e) {
    std::cerr << "scatter: invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "scatter: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }

  if (spec.out.empty()) {
    rs::write_csv(table, std::cout);
  } else {
    std::ofstream file(spec.out, std::ios::binary);
    if (!file) {
      std::cerr << "scatter: cannot write " << spec.out << '\n';
      return kExitInvalid;
    }
    rs::write_csv(table, file);
  }
  return 0;
}
