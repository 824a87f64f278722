#pragma once

// Bilinear densities of plane-wave electron states: number density, spin
// current, transformed spin current, and the free Hamiltonian density.
//
// For a plane wave every same-momentum bilinear is position independent, so
// the box integral is (density) x V. Densities here are the coefficients of
// V; divide by the state-norm coefficient for expectation values.

#include "emshift/states.hpp"

namespace emshift {

/// <r,k| psi^dagger M psi |s,k> = u_r(k)^dagger M u_s(k) V once the momentum
/// delta functions collapse the mode integrals (the 2E_k / 2E_p factor is 1).
BoxMatrixElement configuration_element(Spin bra, Spin ket, const FourMomentum& p, const Matrix4& m);

/// <Psi| psi^dagger M psi |Psi> as the sum over the four spin configurations
/// with weights lambda_r^* lambda_s. Real part only; M is expected hermitian.
BoxQuantity configuration_sum(const ElectronState& s, const Matrix4& m);

/// lambda_+ u_up + lambda_- u_down: the spinor whose bilinears reproduce the
/// configuration sums.
DiracSpinor plane_wave_amplitude(const ElectronState& s);

/// s_1 = Re(psi1* psi2 + psi3* psi4), s_2 = Im(...),
/// s_3 = (|psi1|^2 - |psi2|^2 + |psi3|^2 - |psi4|^2) / 2.
Vec3 spin_current(const DiracSpinor& psi);

/// The spin current with the psi1/psi2 bilinears sign-reversed.
Vec3 transformed_spin_current(const DiracSpinor& psi);

/// s'_p = (1/2) <psi^dagger gamma^5 sigma^{ab} psi> via configuration sums
/// over the explicit matrices.
Vec3 transformed_spin_current_matrix(const ElectronState& s);

/// The vector contracted with A in the energy-shift integrand:
/// [Re(-psi1* psi2 + psi3* psi4), Im(-psi1* psi2 + psi3* psi4),
///  (-|psi1|^2 + |psi2|^2 + |psi3|^2 - |psi4|^2) / 2].
Vec3 energy_shift_vector(const DiracSpinor& psi);

struct BilinearDensities {
  double rho0 = 0.0;
  Vec3 s{};
  Vec3 s_prime{};
  double norm = 0.0;  // state-norm coefficient 2E(|l+|^2 + |l-|^2)

  /// All densities divided by the norm coefficient.
  BilinearDensities normalized() const;
};

/// rho0 and s' come from configuration sums over matrices, s from the
/// component formula on the plane-wave amplitude. Throws std::logic_error if
/// the two routes to s' disagree by more than 1e-12 of the norm.
BilinearDensities bilinear_densities(const ElectronState& s);

/// Largest component difference between the two routes to s', normalized.
double transformed_current_route_deviation(const ElectronState& s);

/// Largest component difference between energy_shift_vector and s',
/// normalized by the state norm.
double shift_vector_identity_check(const ElectronState& s);

/// Integrand of the explicitly hermitian free Hamiltonian, component form,
/// for a plane wave with spatial derivatives d_p psi = i k_p psi.
double hamiltonian_density(const DiracSpinor& psi, const Vec3& k, double mass);

/// alpha.k + m gamma^0 with alpha^p = gamma^0 gamma^p.
Matrix4 free_hamiltonian_matrix(const FourMomentum& p);

/// Hamiltonian density divided by the state norm; equals E for any lambda.
double free_energy_density(const ElectronState& s);

}  // namespace emshift
