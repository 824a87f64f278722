#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "emshift/cli.hpp"

using namespace emshift;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "emshift");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// value printed after `label` on the first matching line
double value_after(const std::string& text, const std::string& label) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first == label) {
      double v = 0;
      ls >> v;
      return v;
    }
  }
  FAIL("label not found: " << label);
  return 0;
}

// numbers on the line starting with `label`: oracle, closed form, deviation
std::vector<double> row(const std::string& text, const std::string& label) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (first != label) continue;
    std::vector<double> v;
    double x;
    while (ls >> x) v.push_back(x);
    return v;
  }
  return {};
}

}  // namespace

TEST_CASE("parse_complex") {
  CHECK(cli::parse_complex("1,0") == Complex{1, 0});
  CHECK(cli::parse_complex("0.6, -0.8") == Complex{0.6, -0.8});
  CHECK(cli::parse_complex("2") == Complex{2, 0});
  CHECK_FALSE(cli::parse_complex("").has_value());
  CHECK_FALSE(cli::parse_complex("a,b").has_value());
  CHECK_FALSE(cli::parse_complex("1;2").has_value());
  CHECK_FALSE(cli::parse_complex("1,2,3").has_value());
  CHECK_FALSE(cli::parse_complex("inf,0").has_value());
}

TEST_CASE("shift subcommand") {
  const Outcome full = run_cli({"shift", "--a0", "1", "--a3", "1"});
  REQUIRE(full.code == 0);
  const auto total = row(full.out, "total");
  REQUIRE(total.size() == 3);
  CHECK(total[0] == doctest::Approx(2.0));
  CHECK(total[1] == doctest::Approx(2.0));
  CHECK(total[2] < 1e-12);

  const Outcome nrl = run_cli({"shift", "--mode", "nrl", "--lambda-plus", "0.70710678118654752,0", "--lambda-minus",
                               "0.70710678118654752,0", "--a0", "1", "--a1", "1", "--a2", "1", "--a3", "1"});
  REQUIRE(nrl.code == 0);
  CHECK(row(nrl.out, "total")[1] == doctest::Approx(0.5));

  const Outcome a1 = run_cli({"shift", "--k", "2", "--a1", "1"});
  REQUIRE(a1.code == 0);
  CHECK(std::abs(row(a1.out, "total")[0]) < 1e-12);

  const Outcome natural = run_cli({"shift", "--a0", "1", "--coupling", "natural"});
  REQUIRE(natural.code == 0);
  CHECK(row(natural.out, "total")[1] == doctest::Approx(2 * 0.30282212087175264));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"shift", "--lambda-plus", "0,0", "--lambda-minus", "0,0"}).code == 2);
  CHECK(run_cli({"shift", "--lambda-plus", "x"}).code == 2);
  CHECK(run_cli({"shift", "--mode", "weird"}).code == 2);
  CHECK(run_cli({"shift", "--bogus"}).code == 2);
  CHECK(run_cli({"shift", "--mass", "-1"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"sweep", "--steps", "1"}).code == 2);
  CHECK(run_cli({"scenario", "--gamma", "0.5"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("sweep subcommand") {
  const Outcome out = run_cli({"sweep", "--k-max", "1", "--steps", "3"});
  REQUIRE(out.code == 0);
  CHECK(out.out.rfind("k_mev,full,nrl_achiral,nrl_pol_r,nrl_pol_l\n0,2,0.5,0.5,1.5\n0.5,", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "emshift_test_sweep.csv";
  const Outcome file = run_cli({"sweep", "--k-max", "1", "--steps", "3", "--out", path.string()});
  REQUIRE(file.code == 0);
  CHECK(file.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == out.out);
  std::filesystem::remove(path);

  const Outcome bad = run_cli({"sweep", "--out", "/nonexistent-dir/x/y.csv"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("cannot open") != std::string::npos);
}

TEST_CASE("scenario subcommand") {
  const Outcome def = run_cli({"scenario"});
  REQUIRE(def.code == 0);
  CHECK(value_after(def.out, "ratio") == doctest::Approx(22.3774).epsilon(1e-5));
  CHECK(value_after(def.out, "a3_natural_mev") == doctest::Approx(0.0449689).epsilon(1e-5));
  CHECK(value_after(def.out, "reference_shift_mev") == doctest::Approx(0.160));

  const Outcome rest = run_cli({"scenario", "--gamma", "1"});
  REQUIRE(rest.code == 0);
  CHECK(rest.out.find("inf") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  const Outcome ok = run_cli({"verify"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("suite halving") != std::string::npos);

  const Outcome tight = run_cli({"verify", "--tolerance", "1e-16"});
  CHECK(tight.code == 1);
  CHECK(tight.out.find("[precision-floor]") != std::string::npos);
  CHECK(tight.out.find("[logic]") == std::string::npos);
}
