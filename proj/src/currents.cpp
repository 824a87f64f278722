#include "emshift/currents.hpp"

#include <cmath>

namespace emshift {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kRouteTolerance = 1e-12;

double max_component_diff(const Vec3& a, const Vec3& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// (Re(a* b), Im(a* b), (|a|^2 - |b|^2) / 2): one 2x2 block's share of the spin current
Vec3 block_spin_current(Complex a, Complex b) {
  const Complex cross = std::conj(a) * b;
  return {cross.real(), cross.imag(), 0.5 * (std::norm(a) - std::norm(b))};
}

}  // namespace

BoxMatrixElement configuration_element(Spin bra, Spin ket, const FourMomentum& p, const Matrix4& m) {
  return {sandwich(dirac_spinor(bra, p), m, dirac_spinor(ket, p)), 1};
}

BoxQuantity configuration_sum(const ElectronState& s, const Matrix4& m) {
  Complex acc = 0.0;
  for (Spin r : {Spin::Up, Spin::Down})
    for (Spin t : {Spin::Up, Spin::Down}) {
      const Complex weight = std::conj(s.coefficient(r)) * s.coefficient(t);
      if (weight == Complex{}) continue;
      acc += weight * configuration_element(r, t, s.momentum(), m).coefficient;
    }
  return {acc.real(), 1};
}

DiracSpinor plane_wave_amplitude(const ElectronState& s) {
  const FourMomentum& p = s.momentum();
  return s.lambda_plus() * dirac_spinor(Spin::Up, p) + s.lambda_minus() * dirac_spinor(Spin::Down, p);
}

Vec3 spin_current(const DiracSpinor& psi) {
  const Vec3 up = block_spin_current(psi[0], psi[1]);
  const Vec3 lo = block_spin_current(psi[2], psi[3]);
  return {up[0] + lo[0], up[1] + lo[1], up[2] + lo[2]};
}

Vec3 transformed_spin_current(const DiracSpinor& psi) {
  const Vec3 up = block_spin_current(psi[0], psi[1]);
  const Vec3 lo = block_spin_current(psi[2], psi[3]);
  return {-up[0] + lo[0], -up[1] + lo[1], -up[2] + lo[2]};
}

Vec3 transformed_spin_current_matrix(const ElectronState& s) {
  const Matrix4 g5 = gamma5();
  Vec3 out{};
  for (int p = 1; p <= 3; ++p) {
    const auto [a, b] = spin_pair(p);
    out[p - 1] = 0.5 * configuration_sum(s, g5 * sigma_ab(a, b)).coefficient;
  }
  return out;
}

Vec3 energy_shift_vector(const DiracSpinor& psi) {
  const Complex cross = -std::conj(psi[0]) * psi[1] + std::conj(psi[2]) * psi[3];
  const double z = 0.5 * (-std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]) - std::norm(psi[3]));
  return {cross.real(), cross.imag(), z};
}

BilinearDensities BilinearDensities::normalized() const {
  BilinearDensities out = *this;
  out.rho0 /= norm;
  for (std::size_t i = 0; i < 3; ++i) {
    out.s[i] /= norm;
    out.s_prime[i] /= norm;
  }
  out.norm = 1.0;
  return out;
}

BilinearDensities bilinear_densities(const ElectronState& s) {
  BilinearDensities d;
  d.norm = state_norm(s).coefficient;
  d.rho0 = configuration_sum(s, Matrix4::identity()).coefficient;
  d.s = spin_current(plane_wave_amplitude(s));
  d.s_prime = transformed_spin_current_matrix(s);
  if (max_component_diff(d.s_prime, transformed_spin_current(plane_wave_amplitude(s))) >
      kRouteTolerance * d.norm)
    throw std::logic_error("bilinear_densities: transformed spin current routes disagree");
  return d;
}

double transformed_current_route_deviation(const ElectronState& s) {
  const double norm = state_norm(s).coefficient;
  return max_component_diff(transformed_spin_current_matrix(s),
                            transformed_spin_current(plane_wave_amplitude(s))) /
         norm;
}

double shift_vector_identity_check(const ElectronState& s) {
  const double norm = state_norm(s).coefficient;
  return max_component_diff(energy_shift_vector(plane_wave_amplitude(s)),
                            transformed_spin_current_matrix(s)) /
         norm;
}

double hamiltonian_density(const DiracSpinor& psi, const Vec3& k, double mass) {
  const Complex d1 = kI * k[0];
  const Complex d2 = kI * k[1];
  const Complex d3 = kI * k[2];
  const auto& [p1, p2, p3, p4] = psi.psi;

  const double mass_term = 2.0 * mass * (std::conj(p1) * p3 + std::conj(p2) * p4).real();
  const Complex upper = std::conj(p1) * d3 * p1 + std::conj(p1) * (d1 - kI * d2) * p2 +
                        std::conj(p2) * (d1 + kI * d2) * p1 - std::conj(p2) * d3 * p2;
  const Complex lower = std::conj(p3) * d3 * p3 + std::conj(p3) * (d1 - kI * d2) * p4 +
                        std::conj(p4) * (d1 + kI * d2) * p3 - std::conj(p4) * d3 * p4;
  return mass_term - upper.imag() + lower.imag();
}

Matrix4 free_hamiltonian_matrix(const FourMomentum& p) {
  Matrix4 h = p.mass() * gamma(0);
  for (int i = 1; i <= 3; ++i) h += p.k()[i - 1] * (gamma(0) * gamma(i));
  return h;
}

double free_energy_density(const ElectronState& s) {
  const FourMomentum& p = s.momentum();
  const double density = hamiltonian_density(plane_wave_amplitude(s), p.k(), p.mass());
  return cancel_volume({density, 1}, state_norm(s));
}

}  // namespace emshift
