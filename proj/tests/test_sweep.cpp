#include <doctest.h>

#include <fstream>
#include <sstream>

#include "emshift/sweep.hpp"
#include "test_support.hpp"

using namespace emshift;
using namespace emshift::testing;

namespace {
std::string golden_path() { return std::string(EMSHIFT_GOLDEN_DIR) + "/sweep_default.csv"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string default_csv() {
  std::ostringstream ss;
  write_sweep_csv(ss, compute_sweep(SweepConfig{}));
  return ss.str();
}
}  // namespace

TEST_CASE("momentum_grid") {
  const std::vector<double> g = momentum_grid(SweepConfig{});
  REQUIRE(g.size() == 301);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 3.0);
  CHECK(g[100] == doctest::Approx(1.0));

  const std::vector<double> two = momentum_grid(SweepConfig{0.5, 2.5, 2});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == 0.5);
  CHECK(two[1] == 2.5);

  CHECK_THROWS_AS(SweepConfig({1.0, 1.0, 10}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig({0.0, 1.0, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig({-1.0, 1.0, 10}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SweepConfig({0.0, 1.0, 10, -0.5}).validate(), std::invalid_argument);
}

TEST_CASE("format_sweep_value") {
  CHECK(format_sweep_value(0.0) == "0");
  CHECK(format_sweep_value(-0.0) == "0");
  CHECK(format_sweep_value(2.0) == "2");
  CHECK(format_sweep_value(1.0 / 3.0) == "0.333333333");
  CHECK(format_sweep_value(2.4998125e-5) == "2.4998125e-05");
}

TEST_CASE("sweep rows") {
  std::ostringstream ss;
  write_sweep_csv(ss, {sweep_row(0.0, constants::kElectronMassMeV)});
  CHECK(ss.str() == std::string(kSweepHeader) + "\n0,2,0.5,0.5,1.5\n");

  const SweepRow far = sweep_row(100 * constants::kElectronMassMeV, constants::kElectronMassMeV);
  CHECK(rel_err(far.full, 2.99995000374969) < 1e-12);
  CHECK(rel_err(far.nrl_achiral, 1.49497525185610) < 1e-12);
  CHECK(rel_err(far.nrl_pol_r, 0.0000249981251562) < 1e-9);
  CHECK(rel_err(far.nrl_pol_l, 2.99992500562453) < 1e-12);
}

TEST_CASE("sweep shape") {
  const std::vector<SweepRow> rows = compute_sweep(SweepConfig{0.0, 50.0, 500});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].full > rows[i - 1].full);
    CHECK(rows[i].nrl_pol_l > rows[i - 1].nrl_pol_l);
    CHECK(rows[i].nrl_pol_r < rows[i - 1].nrl_pol_r);
    CHECK(rows[i].nrl_pol_l >= rows[i].nrl_achiral);
    CHECK(rows[i].nrl_achiral >= rows[i].nrl_pol_r);
  }
  CHECK(rows.back().full < 3.0);
}

TEST_CASE("default sweep matches the golden file byte for byte") {
  const std::string golden = slurp(golden_path());
  REQUIRE_FALSE(golden.empty());
  const std::string first = default_csv();
  CHECK(first == golden);
  CHECK(default_csv() == first);
  CHECK(first.find('\r') == std::string::npos);
}
