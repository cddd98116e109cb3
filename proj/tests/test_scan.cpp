#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "rutherford/scan.hpp"

using namespace rutherford::scan;
using std::numbers::pi;

TEST_CASE("grid syntax") {
  const auto lin = parse_grid("0:1:5");
  REQUIRE(lin.size() == 5);
  CHECK(lin[0] == 0.0);
  CHECK(lin[2] == 0.5);
  CHECK(lin[4] == 1.0);
  const auto th = parse_grid("0.01:pi:3");
  CHECK(th.back() == pi);
  const auto lg = parse_grid("0.01:100:5:log");
  CHECK(lg[0] == 0.01);
  CHECK(lg[2] == doctest::Approx(1.0));
  CHECK(lg[4] == 100.0);
  const auto list = parse_grid("10, 5,2,1");
  CHECK(list == std::vector<double>{10, 5, 2, 1});
  CHECK(parse_grid("pi/2")[0] == pi / 2);
  CHECK(parse_grid("2*pi")[0] == 2 * pi);
  CHECK(parse_number(" -pi ") == -pi);
  CHECK(parse_int_list("100,1000") == std::vector<int>{100, 1000});
  CHECK_THROWS_AS(parse_grid("0:1:1"), InvalidSpec);
  CHECK_THROWS_AS(parse_grid("1:0:5"), InvalidSpec);
  CHECK_THROWS_AS(parse_grid("0:1:5:log"), InvalidSpec);
  CHECK_THROWS_AS(parse_grid("0:1:5:cubic"), InvalidSpec);
  CHECK_THROWS_AS(parse_grid("0:1:2.5"), InvalidSpec);
  CHECK_THROWS_AS(parse_grid("abc"), InvalidSpec);
  CHECK_THROWS_AS(parse_grid(""), InvalidSpec);
  CHECK_THROWS_AS(parse_int_list("1.5"), InvalidSpec);
}

TEST_CASE("quantity names and descriptions") {
  CHECK(quantity_names().size() == 9);
  for (const auto& n : quantity_names()) {
    CHECK(quantity_name(parse_quantity(n)) == n);
    CHECK(describe(n).rfind(n + ":", 0) == 0);
  }
  CHECK(describe("psi_asymptotic").find("rho s >> 1") != std::string::npos);
  CHECK(describe("cesaro").find("(C,1)") != std::string::npos);
  CHECK(describe("bh_mode").find("gamma = -2 M omega") != std::string::npos);
  try {
    describe("psi");
    FAIL("expected InvalidSpec");
  } catch (const InvalidSpec& e) {
    const std::string msg = e.what();
    CHECK(msg.find("psi_exact") != std::string::npos);
    CHECK(msg.find("bh_mode") != std::string::npos);
  }
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1000.0) == "1000");
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::ldexp(std::uniform_real_distribution<double>(-1, 1)(rng), i % 600 - 300);
    CHECK(std::stod(format_number(x)) == x);
  }
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
  Table t{{"a", "b"}, {{1.0, 0.5}, {2.0, -1.0}}};
  std::ostringstream os;
  write_csv(t, os);
  CHECK(os.str() == "a,b\n1,0.5\n2,-1\n");
}

TEST_CASE("spec validation") {
  ScanSpec s;
  s.quantity = Quantity::psi_asymptotic;
  s.theta = {0.0, 1.0};
  CHECK_THROWS_WITH_AS(finalize(s), doctest::Contains("theta=0"), InvalidSpec);
  s.quantity = Quantity::currents;
  CHECK_THROWS_AS(finalize(s), InvalidSpec);
  s.quantity = Quantity::psi_exact;
  CHECK_NOTHROW(finalize(s));
  s.theta = {3.5};
  CHECK_THROWS_AS(finalize(s), InvalidSpec);

  ScanSpec bh;
  bh.quantity = Quantity::bh_mode;
  bh.ell = {0};
  CHECK_THROWS_WITH_AS(finalize(bh), doctest::Contains("outside the domain"), InvalidSpec);
  bh.ell = {2};
  CHECK_NOTHROW(finalize(bh));
  bh.mass = 0.0;
  CHECK_THROWS_AS(finalize(bh), InvalidSpec);

  ScanSpec xs;
  xs.quantity = Quantity::cross_section;
  xs.classical_cross_section = true;
  CHECK_THROWS_AS(finalize(xs), InvalidSpec);

  ScanSpec k;
  k.k = -1.0;
  CHECK_THROWS_AS(finalize(k), InvalidSpec);

  CHECK_THROWS_AS(apply_setting(k, "colour", "red"), InvalidSpec);
  CHECK_THROWS_AS(apply_setting(k, "backreaction", "maybe"), InvalidSpec);
}

TEST_CASE("scans are deterministic across worker counts") {
  ScanSpec s;
  s.quantity = Quantity::psi_asymptotic;
  s.gamma = 1.0;
  s.rho = {10.0, 2.0};
  s.theta = parse_grid("0.05:pi:40");
  const Table one = run_scan(s, 1);
  const Table four = run_scan(s, 4);
  std::ostringstream a, b;
  write_csv(one, a);
  write_csv(four, b);
  CHECK(a.str() == b.str());
  CHECK(one.rows.size() == 80);
  CHECK(one.rows[0][0] == 10.0);
  CHECK(one.rows[40][0] == 2.0);
}

TEST_CASE("every quantity runs on a small grid") {
  for (const auto& name : quantity_names()) {
    ScanSpec s;
    s.quantity = parse_quantity(name);
    s.gamma = 0.4;
    s.theta = {0.5, 2.0};
    s.kx = {-5.0, 5.0};
    s.kz = {-5.0, 10.0};
    s.r = {100.0, 200.0};
    s.ell_max = {20};
    s.cesaro_n = {20};
    CAPTURE(name);
    const Table t = run_scan(s, 2);
    CHECK(!t.header.empty());
    CHECK(!t.rows.empty());
    for (const auto& row : t.rows) CHECK(row.size() == t.header.size());
  }
  ScanSpec c;
  c.quantity = Quantity::bh_mode;
  c.classical_cross_section = true;
  c.theta = {1.0};
  const Table t = run_scan(c);
  CHECK(t.header == std::vector<std::string>{"theta", "abs_f_sq"});
  CHECK(t.rows[0][1] > 0.0);
}

TEST_CASE("presets") {
  for (int i = 1; i <= 7; ++i) {
    const std::string name = "fig" + std::to_string(i);
    CAPTURE(name);
    const auto path = preset_path(name);
    REQUIRE(std::filesystem::exists(path));
    ScanSpec s;
    for (const auto& [k, v] : read_preset(path)) apply_setting(s, k, v);
    CHECK_NOTHROW(finalize(s));
  }
  const auto tmp = std::filesystem::temp_directory_path() / "scatter_preset_test.ini";
  {
    std::ofstream f(tmp);
    f << "# comment\n\nquantity = cesaro  # trailing\n gamma=0.5\n";
  }
  const auto kv = read_preset(tmp);
  REQUIRE(kv.size() == 2);
  CHECK(kv[0] == std::pair<std::string, std::string>{"quantity", "cesaro"});
  CHECK(kv[1] == std::pair<std::string, std::string>{"gamma", "0.5"});
  {
    std::ofstream f(tmp);
    f << "gamma 0.5\n";
  }
  CHECK_THROWS_AS(read_preset(tmp), InvalidSpec);
  std::filesystem::remove(tmp);
  CHECK_THROWS_AS(read_preset("/nonexistent/preset.ini"), InvalidSpec);
}

TEST_CASE("worker count honours SCATTER_THREADS") {
  setenv("SCATTER_THREADS", "1", 1);
  CHECK(thread_count_from_env() == 1);
  unsetenv("SCATTER_THREADS");
  CHECK(thread_count_from_env() >= 1);
}
