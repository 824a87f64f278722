#pragma once

// Physical constants used throughout. Natural units (hbar = c = 1) with
// energies in MeV unless a name says otherwise. Sources are listed in
// docs/constants.md.

#include <cmath>
#include <numbers>

namespace emshift::constants {

/// Electron rest mass [MeV] (CODATA 2014).
inline constexpr double kElectronMassMeV = 0.510998946;

/// Speed of light [m/s] (exact, SI definition).
inline constexpr double kSpeedOfLight = 2.99792458e8;

/// Bohr magneton [eV/T] (CODATA 2014).
inline constexpr double kBohrMagnetonEvPerTesla = 5.7883818060e-5;

/// Fine-structure constant (CODATA 2018).
inline constexpr double kFineStructure = 1.0 / 137.035999084;

/// Free-electron spin g factor magnitude, to leading order.
inline constexpr double kElectronGFactor = 2.0;

inline constexpr double kEvPerMeV = 1.0e6;

/// |e| in Heaviside-Lorentz natural units, sqrt(4 pi alpha).
inline double natural_charge() { return std::sqrt(4.0 * std::numbers::pi * kFineStructure); }

}  // namespace emshift::constants
