#include "emshift/spinors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace emshift {

FourMomentum::FourMomentum(Vec3 k, double mass) : k_(k), mass_(mass) {
  if (!std::isfinite(mass) || mass < 0.0)
    throw std::invalid_argument("FourMomentum: mass must be finite and non-negative");
  for (double c : k)
    if (!std::isfinite(c)) throw std::invalid_argument("FourMomentum: momentum must be finite");
  magnitude_ = std::hypot(k[0], k[1], k[2]);
  energy_ = std::hypot(mass, magnitude_);
}

FourMomentum FourMomentum::along_z(double kz, double mass) { return FourMomentum({0.0, 0.0, kz}, mass); }

double FourMomentum::energy_minus_kz() const {
  const double kz = k_[2];
  if (kz <= 0.0) return energy_ - kz;
  const double transverse2 = k_[0] * k_[0] + k_[1] * k_[1];
  return (mass_ * mass_ + transverse2) / (energy_ + kz);
}

double FourMomentum::energy_plus_kz() const {
  const double kz = k_[2];
  if (kz >= 0.0) return energy_ + kz;
  const double transverse2 = k_[0] * k_[0] + k_[1] * k_[1];
  return (mass_ * mass_ + transverse2) / (energy_ - kz);
}

SpinAxis SpinAxis::make(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw std::invalid_argument("SpinAxis: theta must lie in [0, pi]");
  if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
    throw std::invalid_argument("SpinAxis: phi must lie in [0, 2 pi)");
  return SpinAxis{theta, phi};
}

TwoSpinor two_spinor(const SpinAxis& axis, Spin spin) {
  const double c = std::cos(0.5 * axis.theta);
  const double s = std::sin(0.5 * axis.theta);
  if (spin == Spin::Up) return {Complex{c, 0.0}, std::polar(s, axis.phi)};
  return {-std::polar(s, -axis.phi), Complex{c, 0.0}};
}

double DiracSpinor::norm_squared() const {
  double n = 0.0;
  for (const auto& x : psi) n += std::norm(x);
  return n;
}

DiracSpinor apply(const Matrix4& m, const DiracSpinor& u) {
  DiracSpinor out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += m(r, c) * u[c];
  return out;
}

Complex sandwich(const DiracSpinor& a, const Matrix4& m, const DiracSpinor& b) {
  return inner(a, apply(m, b));
}

Complex inner(const DiracSpinor& a, const DiracSpinor& b) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double scalar_density(const DiracSpinor& u) { return sandwich(u, gamma(0), u).real(); }

DiracSpinor dirac_spinor(Spin spin, const FourMomentum& p) {
  if (!p.z_aligned())
    throw std::invalid_argument("dirac_spinor: only momentum along z is supported");
  // For k = (0,0,kz): k.sigma = diag(E-kz, E+kz), k.sigma-bar = diag(E+kz, E-kz).
  const double lo = std::sqrt(p.energy_minus_kz());
  const double hi = std::sqrt(p.energy_plus_kz());
  const TwoSpinor xi = two_spinor(SpinAxis::z(), spin);
  DiracSpinor u;
  u[0] = lo * xi[0];
  u[1] = hi * xi[1];
  u[2] = hi * xi[0];
  u[3] = lo * xi[1];
  // -0 from the down-spinor's upper entry is normalised to +0
  for (auto& x : u.psi) x = Complex{x.real() + 0.0, x.imag() + 0.0};
  return u;
}

double dirac_equation_residual(const DiracSpinor& u, const FourMomentum& p) {
  const double norm2 = u.norm_squared();
  if (norm2 == 0.0) throw std::invalid_argument("dirac_equation_residual: zero spinor");
  // gamma^mu k_mu = E gamma^0 - k^i gamma^i
  Matrix4 op = p.energy() * gamma(0) - p.mass() * Matrix4::identity();
  for (int i = 1; i <= 3; ++i) op -= p.k()[i - 1] * gamma(i);
  return std::sqrt(apply(op, u).norm_squared() / norm2);
}

}  // namespace emshift
