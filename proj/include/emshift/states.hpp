#pragma once

// Single-electron superpositions lambda_+ |up,k> + lambda_- |down,k> and the
// box-regularised quantities built from them.

#include <stdexcept>

#include "emshift/spinors.hpp"

namespace emshift {

/// A value proportional to a power of the formal box volume
/// V = (2 pi)^3 delta^3(0). The volume is never given a numeric value; only
/// ratios in which it cancels can be turned into plain numbers.
template <typename T>
struct Boxed {
  T coefficient{};
  int volume_power = 1;

  friend Boxed operator+(const Boxed& a, const Boxed& b) {
    if (a.volume_power != b.volume_power)
      throw std::logic_error("Boxed: adding quantities with different volume powers");
    return {a.coefficient + b.coefficient, a.volume_power};
  }
  template <typename S>
  friend Boxed operator*(S scale, const Boxed& a) {
    return {static_cast<T>(scale * a.coefficient), a.volume_power};
  }
};

using BoxQuantity = Boxed<double>;
using BoxMatrixElement = Boxed<Complex>;

/// num / den as a plain number. Throws std::logic_error if the volume does
/// not cancel, or std::domain_error for a zero denominator.
double cancel_volume(const BoxQuantity& num, const BoxQuantity& den);

/// <Psi|Psi> = 2E (|lambda_+|^2 + |lambda_-|^2) V
using RegularizedNorm = BoxQuantity;

class ElectronState {
public:
  /// Throws std::invalid_argument if both coefficients vanish or are not finite.
  ElectronState(FourMomentum p, Complex lambda_plus, Complex lambda_minus);

  const FourMomentum& momentum() const { return p_; }
  Complex lambda_plus() const { return lambda_plus_; }
  Complex lambda_minus() const { return lambda_minus_; }
  Complex coefficient(Spin s) const { return s == Spin::Up ? lambda_plus_ : lambda_minus_; }

  /// |lambda_+|^2 + |lambda_-|^2
  double weight() const { return std::norm(lambda_plus_) + std::norm(lambda_minus_); }

  /// |lambda_+|^2 - |lambda_-|^2
  double polarization() const { return std::norm(lambda_plus_) - std::norm(lambda_minus_); }

  /// lambda_+^* lambda_-
  Complex coherence() const { return std::conj(lambda_plus_) * lambda_minus_; }

private:
  FourMomentum p_;
  Complex lambda_plus_;
  Complex lambda_minus_;
};

RegularizedNorm state_norm(const ElectronState& s);

/// <X_{kz}> = <S_z> = (|lambda_+|^2 - |lambda_-|^2) / (2 (|lambda_+|^2 + |lambda_-|^2)).
/// This is the helicity identification valid for m << E; no finite-mass
/// chirality operator is attempted.
double chirality_expectation(const ElectronState& s);

}  // namespace emshift
