#pragma once

// Momentum sweeps of the normalized shifts (|e| = 1, A0 = A1 = A2 = A3 = 1).

#include <iosfwd>
#include <string>
#include <vector>

#include "emshift/constants.hpp"

namespace emshift {

struct SweepConfig {
  double k_min = 0.0;  // MeV
  double k_max = 3.0;  // MeV
  int steps = 301;
  double mass = constants::kElectronMassMeV;

  /// Throws std::invalid_argument unless 0 <= k_min < k_max, steps >= 2,
  /// mass >= 0, all finite.
  void validate() const;
};

struct SweepRow {
  double k = 0.0;
  double full = 0.0;
  double nrl_achiral = 0.0;
  double nrl_pol_r = 0.0;
  double nrl_pol_l = 0.0;
};

inline constexpr const char* kSweepHeader = "k_mev,full,nrl_achiral,nrl_pol_r,nrl_pol_l";

/// Uniform grid over [k_min, k_max], both endpoints included exactly.
std::vector<double> momentum_grid(const SweepConfig& config);

SweepRow sweep_row(double k, double mass);

std::vector<SweepRow> compute_sweep(const SweepConfig& config);

/// 9 significant digits, '.' separator, '\n' line endings.
std::string format_sweep_value(double value);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace emshift
