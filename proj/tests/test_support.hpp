#pragma once

// Random generators and comparison helpers shared by the unit tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "emshift/shift_engine.hpp"

namespace emshift::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0xC0FFEE);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// (lambda_+, lambda_-) uniform on the unit sphere in C^2.
inline std::pair<Complex, Complex> random_lambdas() {
  std::normal_distribution<double> g;
  Complex a{g(rng()), g(rng())}, b{g(rng()), g(rng())};
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

inline ElectronState random_state(double k_max = 100.0, double mass = constants::kElectronMassMeV) {
  const auto [lp, lm] = random_lambdas();
  return ElectronState(FourMomentum::along_z(uniform(0.0, k_max), mass), lp, lm);
}

inline PotentialAverages random_potentials() {
  return {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
}

inline DiracSpinor random_spinor() {
  DiracSpinor u;
  for (auto& x : u.psi) x = {uniform(-1, 1), uniform(-1, 1)};
  return u;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double max_result_diff(const ShiftResult& a, const ShiftResult& b) {
  double worst = std::abs(a.total - b.total);
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.by_component[i] - b.by_component[i]));
  return worst;
}

}  // namespace emshift::testing
