#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rutherford::scan {

/// A scan request that cannot be run as stated (bad grid, angle outside the
/// quantity's domain, unknown key). Maps to exit status 2.
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Quantity {
  psi_exact,
  psi_asymptotic,
  currents,
  cross_section,
  cesaro,
  reduced_series,
  diverging_sum,
  field_map,
  bh_mode,
};

const std::vector<std::string>& quantity_names();
Quantity parse_quantity(const std::string& name);
std::string quantity_name(Quantity q);

/// Static description: governing relation and validity region.
std::string describe(const std::string& name);

/// Grid syntax: "A:B:N" (N >= 2 linear samples, A < B), "A:B:N:log"
/// (geometric, 0 < A < B), "a,b,c" or a single value. The token "pi" and
/// the forms "X*pi", "pi/X" are accepted wherever a number is.
std::vector<double> parse_grid(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
double parse_number(const std::string& token);

struct ScanSpec {
  Quantity quantity = Quantity::psi_exact;
  double gamma = 1.0;
  double k = 1.0;
  double mass = 0.05;
  double omega = 1.0;
  double mu = 0.0;
  std::vector<double> rho{10.0};
  std::vector<double> theta;
  std::vector<double> kx;
  std::vector<double> kz;
  std::vector<double> r;
  std::vector<int> ell_max{100};
  std::vector<int> cesaro_n{100};
  std::vector<int> ell{2};
  bool backreaction = true;
  bool classical_cross_section = false;
  std::string out;
};

/// Applies one "key = value" setting; keys are the long CLI option names
/// without dashes (gamma, rho-range, ...) plus "quantity".
void apply_setting(ScanSpec& spec, const std::string& key, const std::string& value);

/// Reads a preset file of "key = value" lines; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_preset(const std::filesystem::path& file);

/// Directory holding fig1 ... fig7: $SCATTER_PRESET_DIR if set, otherwise
/// the presets/ directory of the source tree.
std::filesystem::path preset_directory();
std::filesystem::path preset_path(const std::string& name);

/// Fills grids left empty with the quantity's defaults and checks every
/// precondition. Throws InvalidSpec.
void finalize(ScanSpec& spec);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Evaluates every grid point. Rows are computed by up to `threads`
/// workers and stored in grid order.
Table run_scan(const ScanSpec& spec, unsigned threads = 1);

/// Worker count: hardware concurrency capped by $SCATTER_THREADS.
unsigned thread_count_from_env();

/// 17 significant digits, "nan"/"inf" spelled out.
std::string format_number(double x);
void write_csv(const Table& table, std::ostream& os);

}  // namespace rutherford::scan
