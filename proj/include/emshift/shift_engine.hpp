#pragma once

// First-order energy shift <Delta H> of a free-electron state in constant
// (averaged) electromagnetic potentials A_mu = (A0, A1, A2, A3).
//
// Two independent routes are provided:
//   * shift_oracle: explicit spinor matrix elements of the shift operator,
//     summed over the four spin configurations and divided by the state norm
//     after the box volume has cancelled;
//   * shift_full / shift_nrl / ...: closed forms.
//
// All closed forms assume momentum along +z (or -z; the signed kz enters
// wherever |k| would) and spin-z eigenstates as the basis.

#include <array>

#include "emshift/currents.hpp"

namespace emshift {

enum class TreatmentMode { Full, NRL };
enum class Handedness { Right, Left };

const char* to_string(TreatmentMode mode);

/// Averaged potential components (A0, A1, A2, A3).
struct PotentialAverages {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  /// A0 = A1 = A2 = A3 = value
  static PotentialAverages uniform(double value) { return {value, value, value, value}; }

  std::array<double, 4> components() const { return {a0, a1, a2, a3}; }
  double max_abs() const;
};

struct ShiftResult {
  double total = 0.0;
  std::array<double, 4> by_component{};  // contributions of A0, A1, A2, A3
  TreatmentMode mode = TreatmentMode::Full;
  double charge_magnitude = 1.0;

  double electric() const { return by_component[0]; }
  double magnetic() const { return by_component[1] + by_component[2] + by_component[3]; }
};

/// Hermitian M with psi^dagger M psi = Re(c psi_i^* psi_j); i, j in 1..4.
Matrix4 re_bilinear(int i, int j, Complex c = 1.0);

/// Hermitian M with psi^dagger M psi = Im(c psi_i^* psi_j); i, j in 1..4.
Matrix4 im_bilinear(int i, int j, Complex c = 1.0);

/// Operator multiplying A_mu in the shift integrand (before the 2|e| factor):
/// mu = 0: rho0 = sum |psi_j|^2; mu = 1, 2, 3: the components of
/// energy_shift_vector, assembled from re_bilinear / im_bilinear.
Matrix4 shift_operator(int mu);

/// The four bra-ket configurations in the order up-up, down-down, up-down, down-up.
struct Configuration {
  Spin bra;
  Spin ket;
};
inline constexpr std::array<Configuration, 4> kConfigurations{{
    {Spin::Up, Spin::Up},
    {Spin::Down, Spin::Down},
    {Spin::Up, Spin::Down},
    {Spin::Down, Spin::Up},
}};

/// <bra,k| psi^dagger M psi |ket,k>; in NRL mode psi3 and psi4 are dropped
/// from both spinors first.
BoxMatrixElement mode_element(Spin bra, Spin ket, const FourMomentum& p, const Matrix4& m,
                              TreatmentMode mode);

struct OracleBreakdown {
  /// [configuration][mu]: 2|e| A_mu lambda_bra^* lambda_ket <bra|O_mu|ket>
  std::array<std::array<BoxMatrixElement, 4>, 4> numerators{};
  RegularizedNorm norm;
  TreatmentMode mode = TreatmentMode::Full;
  double charge_magnitude = 1.0;
};

/// Per-configuration numerators of <Psi|Delta H|Psi>. Throws
/// std::invalid_argument for momentum off the z axis.
OracleBreakdown shift_oracle_breakdown(const ElectronState& s, const PotentialAverages& a,
                                       TreatmentMode mode, double charge = 1.0);

/// Sum the breakdown over configurations and divide by the norm.
ShiftResult reduce(const OracleBreakdown& breakdown);

ShiftResult shift_oracle(const ElectronState& s, const PotentialAverages& a, TreatmentMode mode,
                         double charge = 1.0);

/// |e| (2 A0 + (k/E) A3); independent of lambda.
ShiftResult shift_full(const ElectronState& s, const PotentialAverages& a, double charge = 1.0);

/// Non-relativistic limit:
///   electric  |e| A0 (1 - (k/E) P / W)
///   magnetic  -|e| / W {(m/E)[A1 Re(l+* l-) + A2 Im(l+* l-)] + A3 P / 2} + |e| A3 k / (2E)
/// with W = |l+|^2 + |l-|^2 and P = |l+|^2 - |l-|^2.
ShiftResult shift_nrl(const ElectronState& s, const PotentialAverages& a, double charge = 1.0);

/// |e| A0 (1 - (2k/E) <X>), the electric NRL shift written through the
/// chirality expectation.
double shift_nrl_chiral_form(const ElectronState& s, double a0, double charge = 1.0);

/// Achiral state (lambda_+ = lambda_- real): |e| (A0 - (m/2E) A1 + (k/2E) A3).
ShiftResult shift_nrl_achiral(const FourMomentum& p, const PotentialAverages& a, double charge = 1.0);

/// Fully polarized state, right (lambda_- = 0) takes the upper sign:
/// |e| [A0 (1 -+ k/E) + A3 (k/2E -+ 1/2)].
ShiftResult shift_nrl_polarized(const FourMomentum& p, const PotentialAverages& a, Handedness hand,
                                double charge = 1.0);

struct ShiftDifferences {
  double pol_minus_achiral_r = 0.0;
  double pol_minus_achiral_l = 0.0;
  double l_minus_r = 0.0;
  /// l_minus_r - (pol_minus_achiral_l - pol_minus_achiral_r)
  double decomposition_residual = 0.0;
};

/// NRL polarized-minus-achiral differences and the left-minus-right
/// difference, each from its own closed form. Throws std::logic_error if
/// L - R differs from (L - achiral) + (achiral - R) beyond 1e-14 of scale.
ShiftDifferences shift_differences(const FourMomentum& p, const PotentialAverages& a,
                                   double charge = 1.0);

/// -g_s mu_B B.S [eV] for a spin S = (0, 0, spin_z) and B in tesla.
double zeeman_shift(const Vec3& b_tesla, double spin_z, double g_s = constants::kElectronGFactor);

}  // namespace emshift
