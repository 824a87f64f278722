#pragma once

// Momentum-space positive-energy Dirac spinors u^s(k) in the Weyl basis.

#include <array>

#include "emshift/algebra.hpp"
#include "emshift/constants.hpp"

namespace emshift {

using Vec3 = std::array<double, 3>;

enum class Spin { Up, Down };

/// On-shell four-momentum of a particle of given mass. Energy is derived,
/// E = sqrt(m^2 + |k|^2) [MeV].
class FourMomentum {
public:
  /// Throws std::invalid_argument for negative or non-finite input.
  explicit FourMomentum(Vec3 k, double mass = constants::kElectronMassMeV);

  /// Momentum k = (0, 0, kz).
  static FourMomentum along_z(double kz, double mass = constants::kElectronMassMeV);

  double mass() const { return mass_; }
  const Vec3& k() const { return k_; }
  double kz() const { return k_[2]; }
  double energy() const { return energy_; }
  double magnitude() const { return magnitude_; }

  /// True when the transverse components vanish exactly.
  bool z_aligned() const { return k_[0] == 0.0 && k_[1] == 0.0; }

  /// E - kz and E + kz, each computed without cancellation (the small one
  /// goes through m^2 / (E + |kz|)).
  double energy_minus_kz() const;
  double energy_plus_kz() const;

private:
  Vec3 k_;
  double mass_;
  double energy_;
  double magnitude_;
};

/// Polar/azimuthal direction of a spin quantisation axis.
struct SpinAxis {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  /// Throws std::invalid_argument for out-of-range angles.
  static SpinAxis make(double theta, double phi);
  static SpinAxis z() { return {}; }
};

using TwoSpinor = std::array<Complex, 2>;

/// Two-component spin state along the given axis:
/// xi(Up) = (cos(theta/2), e^{i phi} sin(theta/2)),
/// xi(Down) = (-e^{-i phi} sin(theta/2), cos(theta/2)).
TwoSpinor two_spinor(const SpinAxis& axis, Spin spin);

/// Four complex components psi1..psi4 [MeV^{1/2}].
struct DiracSpinor {
  std::array<Complex, 4> psi{};

  Complex& operator[](std::size_t i) { return psi[i]; }
  const Complex& operator[](std::size_t i) const { return psi[i]; }

  DiracSpinor& operator+=(const DiracSpinor& o) {
    for (std::size_t i = 0; i < 4; ++i) psi[i] += o.psi[i];
    return *this;
  }
  friend DiracSpinor operator+(DiracSpinor a, const DiracSpinor& b) { return a += b; }
  friend DiracSpinor operator*(Complex c, DiracSpinor a) {
    for (auto& x : a.psi) x *= c;
    return a;
  }

  /// psi^dagger psi
  double norm_squared() const;
};

DiracSpinor apply(const Matrix4& m, const DiracSpinor& u);

/// a^dagger M b
Complex sandwich(const DiracSpinor& a, const Matrix4& m, const DiracSpinor& b);

/// a^dagger b
Complex inner(const DiracSpinor& a, const DiracSpinor& b);

/// psi-bar psi = psi^dagger gamma^0 psi
double scalar_density(const DiracSpinor& u);

/// Spin-z spinor for momentum along z:
///   u_up = (sqrt(E-kz), 0, sqrt(E+kz), 0), u_down = (0, sqrt(E+kz), 0, sqrt(E-kz)).
/// Built as (sqrt(k.sigma) xi, sqrt(k.sigma-bar) xi) with xi = two_spinor(z, spin).
/// Throws std::invalid_argument when p has transverse momentum.
DiracSpinor dirac_spinor(Spin spin, const FourMomentum& p);

/// |(gamma^mu k_mu - m) u| / |u| with k_mu = (E, -k). Throws
/// std::invalid_argument for a zero spinor.
double dirac_equation_residual(const DiracSpinor& u, const FourMomentum& p);

}  // namespace emshift
