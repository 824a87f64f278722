#include "emshift/phys_units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "emshift/constants.hpp"
#include "emshift/shift_engine.hpp"

namespace emshift {

double tesla_meter_to_mev(double b_tesla, double length_m) {
  // e c B L / e = c B L volts
  return b_tesla * length_m * constants::kSpeedOfLight / constants::kEvPerMeV;
}

double velocity_from_gamma(double lorentz_gamma) {
  if (!std::isfinite(lorentz_gamma) || lorentz_gamma < 1.0)
    throw std::invalid_argument("velocity_from_gamma: gamma must be >= 1");
  // sqrt((g-1)(g+1)) / g keeps precision for g close to 1
  return std::sqrt((lorentz_gamma - 1.0) * (lorentz_gamma + 1.0)) / lorentz_gamma;
}

void Scenario::validate() const {
  if (!std::isfinite(b_field_tesla) || b_field_tesla < 0.0)
    throw std::invalid_argument("Scenario: B must be finite and >= 0");
  if (!std::isfinite(apparatus_scale_m) || apparatus_scale_m <= 0.0)
    throw std::invalid_argument("Scenario: d must be finite and > 0");
  if (!std::isfinite(lorentz_gamma) || lorentz_gamma < 1.0)
    throw std::invalid_argument("Scenario: gamma must be >= 1");
}

ScenarioReport scenario_estimate(const Scenario& sc) {
  sc.validate();
  ScenarioReport r;
  r.a3_natural_mev = 0.5 * tesla_meter_to_mev(sc.b_field_tesla, sc.apparatus_scale_m);
  r.shift_ultrarelativistic_mev = r.a3_natural_mev;
  r.velocity = velocity_from_gamma(sc.lorentz_gamma);
  r.shift_at_gamma_mev = r.velocity * r.a3_natural_mev;
  r.ratio = r.velocity > 0.0 ? 1.0 / r.velocity : std::numeric_limits<double>::infinity();
  r.zeeman_ev = zeeman_shift({0.0, 0.0, sc.b_field_tesla}, 0.5, constants::kElectronGFactor);
  r.reference_over_estimate = r.shift_ultrarelativistic_mev > 0.0
                                  ? r.reference_shift_mev / r.shift_ultrarelativistic_mev
                                  : std::numeric_limits<double>::infinity();
  r.reference_at_gamma_over_mass = r.velocity * r.reference_shift_mev / constants::kElectronMassMeV;
  r.estimate_over_mass = r.shift_ultrarelativistic_mev / constants::kElectronMassMeV;
  return r;
}

}  // namespace emshift
