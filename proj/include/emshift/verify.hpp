#pragma once

// Self-check suites run by `emshift verify`.
//
// Every property is evaluated over its whole grid and reported once, with
// the worst deviation seen. When a tolerance override is given and a
// property fails under it but would pass under its own default, the failure
// is classed as a floating-point floor rather than a logic error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "emshift/algebra.hpp"

namespace emshift {

struct VerifyOptions {
  std::optional<double> tolerance;
  GammaSet gammas = GammaSet::weyl();
  std::uint64_t seed = 0x5eed2024;
  int random_states = 1000;
};

struct CheckFailure {
  std::string property;
  double deviation = 0.0;
  double tolerance = 0.0;
  double default_tolerance = 0.0;

  bool precision_floor() const { return deviation <= default_tolerance; }
};

struct SuiteReport {
  std::string name;
  int passed = 0;
  std::vector<CheckFailure> failures;

  int total() const { return passed + static_cast<int>(failures.size()); }
};

struct VerifyReport {
  std::vector<SuiteReport> suites;

  bool ok() const;
  const SuiteReport* suite(const std::string& name) const;
};

/// Suites, in order: clifford, spinors, identities, oracle, halving.
VerifyReport run_verification(const VerifyOptions& options = {});

void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace emshift
