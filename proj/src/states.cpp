#include "emshift/states.hpp"

#include <cmath>
#include <string>

namespace emshift {

double cancel_volume(const BoxQuantity& num, const BoxQuantity& den) {
  if (num.volume_power != den.volume_power)
    throw std::logic_error("cancel_volume: ratio retains V^" +
                           std::to_string(num.volume_power - den.volume_power));
  if (den.coefficient == 0.0) throw std::domain_error("cancel_volume: zero denominator");
  return num.coefficient / den.coefficient;
}

ElectronState::ElectronState(FourMomentum p, Complex lambda_plus, Complex lambda_minus)
    : p_(p), lambda_plus_(lambda_plus), lambda_minus_(lambda_minus) {
  const bool finite = std::isfinite(lambda_plus.real()) && std::isfinite(lambda_plus.imag()) &&
                      std::isfinite(lambda_minus.real()) && std::isfinite(lambda_minus.imag());
  if (!finite) throw std::invalid_argument("ElectronState: coefficients must be finite");
  if (weight() <= 0.0) throw std::invalid_argument("ElectronState: zero state");
}

RegularizedNorm state_norm(const ElectronState& s) {
  return {2.0 * s.momentum().energy() * s.weight(), 1};
}

double chirality_expectation(const ElectronState& s) { return 0.5 * s.polarization() / s.weight(); }

}  // namespace emshift
