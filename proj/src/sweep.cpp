#include "emshift/sweep.hpp"

#include <cmath>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "emshift/shift_engine.hpp"

namespace emshift {

void SweepConfig::validate() const {
  if (!std::isfinite(k_min) || !std::isfinite(k_max) || k_min < 0.0 || !(k_max > k_min))
    throw std::invalid_argument("SweepConfig: need 0 <= k_min < k_max");
  if (steps < 2) throw std::invalid_argument("SweepConfig: steps must be >= 2");
  if (!std::isfinite(mass) || mass < 0.0) throw std::invalid_argument("SweepConfig: mass must be >= 0");
}

std::vector<double> momentum_grid(const SweepConfig& config) {
  config.validate();
  std::vector<double> grid(static_cast<std::size_t>(config.steps));
  const double span = config.k_max - config.k_min;
  const double last = static_cast<double>(config.steps - 1);
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = config.k_min + span * (static_cast<double>(i) / last);
  grid.back() = config.k_max;
  return grid;
}

SweepRow sweep_row(double k, double mass) {
  const FourMomentum p = FourMomentum::along_z(k, mass);
  const PotentialAverages unit = PotentialAverages::uniform(1.0);
  SweepRow row;
  row.k = k;
  row.full = shift_full(ElectronState(p, 1.0, 0.0), unit).total;
  row.nrl_achiral = shift_nrl_achiral(p, unit).total;
  row.nrl_pol_r = shift_nrl_polarized(p, unit, Handedness::Right).total;
  row.nrl_pol_l = shift_nrl_polarized(p, unit, Handedness::Left).total;
  return row;
}

std::vector<SweepRow> compute_sweep(const SweepConfig& config) {
  std::vector<SweepRow> rows;
  for (double k : momentum_grid(config)) rows.push_back(sweep_row(k, config.mass));
  return rows;
}

std::string format_sweep_value(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  // to_chars is locale independent, so the separator is always '.'
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << format_sweep_value(r.k) << ',' << format_sweep_value(r.full) << ','
        << format_sweep_value(r.nrl_achiral) << ',' << format_sweep_value(r.nrl_pol_r) << ','
        << format_sweep_value(r.nrl_pol_l) << '\n';
  }
}

}  // namespace emshift
