#pragma once

// SI -> natural-unit bridges and the weak-bar-magnet order-of-magnitude
// estimate.

namespace emshift {

/// |e| c B L expressed in MeV: the energy scale |e| A for a vector potential
/// of magnitude B L. B in tesla, L in metres.
double tesla_meter_to_mev(double b_tesla, double length_m);

/// v = sqrt(1 - 1/gamma^2). Throws std::invalid_argument for gamma < 1.
double velocity_from_gamma(double lorentz_gamma);

struct Scenario {
  double b_field_tesla = 3e-4;
  double apparatus_scale_m = 1.0;
  double lorentz_gamma = 1.001;

  /// Throws std::invalid_argument if B < 0, d <= 0, gamma < 1 or non-finite.
  void validate() const;
};

/// Literature estimate of the bar-magnet shift for the default scenario [MeV].
inline constexpr double kReferenceBarMagnetShiftMeV = 0.160;

struct ScenarioReport {
  double a3_natural_mev = 0.0;           // |e| A3 with A = B x x / 2 at |x| = d
  double shift_ultrarelativistic_mev = 0.0;  // (k/E -> 1) |e| A3
  double velocity = 0.0;                 // k/E at the scenario's gamma
  double shift_at_gamma_mev = 0.0;       // v |e| A3
  double ratio = 0.0;                    // ultrarelativistic / at gamma; +inf when v = 0
  double zeeman_ev = 0.0;                // S_z = +1/2, g = 2
  double reference_shift_mev = kReferenceBarMagnetShiftMeV;
  double reference_over_estimate = 0.0;  // reference / shift_ultrarelativistic
  double reference_at_gamma_over_mass = 0.0;  // v * reference / m_e
  double estimate_over_mass = 0.0;       // shift_ultrarelativistic / m_e
};

ScenarioReport scenario_estimate(const Scenario& sc);

}  // namespace emshift
