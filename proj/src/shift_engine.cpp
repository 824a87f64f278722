#include "emshift/shift_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace emshift {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kDecompositionTolerance = 1e-14;

void require_z_aligned(const FourMomentum& p, const char* where) {
  if (!p.z_aligned())
    throw std::invalid_argument(std::string(where) + ": momentum must lie along the z axis");
}

void require_finite(const PotentialAverages& a, const char* where) {
  for (double c : a.components())
    if (!std::isfinite(c)) throw std::invalid_argument(std::string(where) + ": non-finite potential");
}

std::size_t index_of(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("bilinear index must be 1..4");
  return static_cast<std::size_t>(i - 1);
}

DiracSpinor drop_lower(DiracSpinor u) {
  u[2] = 0.0;
  u[3] = 0.0;
  return u;
}

ShiftResult make_result(std::array<double, 4> parts, TreatmentMode mode, double charge) {
  ShiftResult r;
  r.by_component = parts;
  r.total = parts[0] + parts[1] + parts[2] + parts[3];
  r.mode = mode;
  r.charge_magnitude = charge;
  return r;
}

}  // namespace

const char* to_string(TreatmentMode mode) { return mode == TreatmentMode::Full ? "full" : "nrl"; }

double PotentialAverages::max_abs() const {
  return std::max({std::abs(a0), std::abs(a1), std::abs(a2), std::abs(a3)});
}

Matrix4 re_bilinear(int i, int j, Complex c) {
  // Re(z) = (z + z*) / 2 with z = c psi_i^* psi_j
  Matrix4 m;
  m(index_of(i), index_of(j)) += 0.5 * c;
  m(index_of(j), index_of(i)) += 0.5 * std::conj(c);
  return m;
}

Matrix4 im_bilinear(int i, int j, Complex c) {
  // Im(z) = (z - z*) / 2i
  Matrix4 m;
  m(index_of(i), index_of(j)) += c / (2.0 * kI);
  m(index_of(j), index_of(i)) -= std::conj(c) / (2.0 * kI);
  return m;
}

Matrix4 shift_operator(int mu) {
  switch (mu) {
    case 0:
      return re_bilinear(1, 1) + re_bilinear(2, 2) + re_bilinear(3, 3) + re_bilinear(4, 4);
    case 1:
      return re_bilinear(1, 2, -1.0) + re_bilinear(3, 4);
    case 2:
      return im_bilinear(1, 2, -1.0) + im_bilinear(3, 4);
    case 3:
      return 0.5 * (re_bilinear(1, 1, -1.0) + re_bilinear(2, 2) + re_bilinear(3, 3) +
                    re_bilinear(4, 4, -1.0));
    default:
      throw std::out_of_range("shift_operator: mu must be 0..3");
  }
}

BoxMatrixElement mode_element(Spin bra, Spin ket, const FourMomentum& p, const Matrix4& m,
                              TreatmentMode mode) {
  DiracSpinor u_bra = dirac_spinor(bra, p);
  DiracSpinor u_ket = dirac_spinor(ket, p);
  if (mode == TreatmentMode::NRL) {
    u_bra = drop_lower(u_bra);
    u_ket = drop_lower(u_ket);
  }
  return {sandwich(u_bra, m, u_ket), 1};
}

OracleBreakdown shift_oracle_breakdown(const ElectronState& s, const PotentialAverages& a,
                                       TreatmentMode mode, double charge) {
  require_z_aligned(s.momentum(), "shift_oracle");
  require_finite(a, "shift_oracle");
  OracleBreakdown out;
  out.mode = mode;
  out.charge_magnitude = charge;
  // The normalisation always uses the full four-component spinors.
  out.norm = state_norm(s);

  const auto amps = a.components();
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const Matrix4 op = shift_operator(static_cast<int>(mu));
    for (std::size_t c = 0; c < kConfigurations.size(); ++c) {
      const auto [bra, ket] = kConfigurations[c];
      const Complex weight = std::conj(s.coefficient(bra)) * s.coefficient(ket);
      const BoxMatrixElement element = mode_element(bra, ket, s.momentum(), op, mode);
      out.numerators[c][mu] = (2.0 * charge * amps[mu] * weight) * element;
    }
  }
  return out;
}

ShiftResult reduce(const OracleBreakdown& breakdown) {
  std::array<double, 4> parts{};
  for (std::size_t mu = 0; mu < 4; ++mu) {
    BoxMatrixElement sum{0.0, breakdown.norm.volume_power};
    for (const auto& per_config : breakdown.numerators) sum = sum + per_config[mu];
    // Opposite-spin configurations come in conjugate pairs; the imaginary
    // parts cancel and only the real part is physical.
    parts[mu] = cancel_volume({sum.coefficient.real(), sum.volume_power}, breakdown.norm);
  }
  return make_result(parts, breakdown.mode, breakdown.charge_magnitude);
}

ShiftResult shift_oracle(const ElectronState& s, const PotentialAverages& a, TreatmentMode mode,
                         double charge) {
  return reduce(shift_oracle_breakdown(s, a, mode, charge));
}

ShiftResult shift_full(const ElectronState& s, const PotentialAverages& a, double charge) {
  const FourMomentum& p = s.momentum();
  require_z_aligned(p, "shift_full");
  require_finite(a, "shift_full");
  const double v = p.kz() / p.energy();
  return make_result({2.0 * charge * a.a0, 0.0, 0.0, charge * v * a.a3}, TreatmentMode::Full, charge);
}

ShiftResult shift_nrl(const ElectronState& s, const PotentialAverages& a, double charge) {
  const FourMomentum& p = s.momentum();
  require_z_aligned(p, "shift_nrl");
  require_finite(a, "shift_nrl");
  const double v = p.kz() / p.energy();
  const double mass_ratio = p.mass() / p.energy();
  const double w = s.weight();
  const double pol = s.polarization();
  const Complex coh = s.coherence();

  const double electric = charge * a.a0 * (1.0 - v * pol / w);
  const double m1 = -charge / w * mass_ratio * a.a1 * coh.real();
  const double m2 = -charge / w * mass_ratio * a.a2 * coh.imag();
  const double m3 = -charge / w * 0.5 * a.a3 * pol + 0.5 * charge * a.a3 * v;
  return make_result({electric, m1, m2, m3}, TreatmentMode::NRL, charge);
}

double shift_nrl_chiral_form(const ElectronState& s, double a0, double charge) {
  const FourMomentum& p = s.momentum();
  require_z_aligned(p, "shift_nrl_chiral_form");
  const double v = p.kz() / p.energy();
  return charge * a0 * (1.0 - 2.0 * v * chirality_expectation(s));
}

ShiftResult shift_nrl_achiral(const FourMomentum& p, const PotentialAverages& a, double charge) {
  require_z_aligned(p, "shift_nrl_achiral");
  require_finite(a, "shift_nrl_achiral");
  const double v = p.kz() / p.energy();
  const double mass_ratio = p.mass() / p.energy();
  return make_result({charge * a.a0, -0.5 * charge * mass_ratio * a.a1, 0.0, 0.5 * charge * v * a.a3},
                     TreatmentMode::NRL, charge);
}

ShiftResult shift_nrl_polarized(const FourMomentum& p, const PotentialAverages& a, Handedness hand,
                                double charge) {
  require_z_aligned(p, "shift_nrl_polarized");
  require_finite(a, "shift_nrl_polarized");
  const double v = p.kz() / p.energy();
  const double sign = hand == Handedness::Right ? -1.0 : 1.0;
  return make_result({charge * a.a0 * (1.0 + sign * v), 0.0, 0.0, charge * a.a3 * (0.5 * v + sign * 0.5)},
                     TreatmentMode::NRL, charge);
}

ShiftDifferences shift_differences(const FourMomentum& p, const PotentialAverages& a, double charge) {
  require_z_aligned(p, "shift_differences");
  require_finite(a, "shift_differences");
  const double v = p.kz() / p.energy();
  const double mass_ratio = p.mass() / p.energy();

  auto pol_minus_achiral = [&](double sign) {
    return charge * (sign * v * a.a0 + 0.5 * mass_ratio * a.a1 + sign * 0.5 * a.a3);
  };

  ShiftDifferences d;
  d.pol_minus_achiral_r = pol_minus_achiral(-1.0);
  d.pol_minus_achiral_l = pol_minus_achiral(+1.0);
  d.l_minus_r = charge * (2.0 * v * a.a0 + a.a3);
  d.decomposition_residual = d.l_minus_r - (d.pol_minus_achiral_l - d.pol_minus_achiral_r);

  const double scale = std::max(std::abs(charge) * a.max_abs(), 1e-300);
  if (std::abs(d.decomposition_residual) > kDecompositionTolerance * scale)
    throw std::logic_error("shift_differences: L - R does not decompose through the achiral state");
  return d;
}

double zeeman_shift(const Vec3& b_tesla, double spin_z, double g_s) {
  for (double c : b_tesla)
    if (!std::isfinite(c)) throw std::invalid_argument("zeeman_shift: non-finite field");
  return -g_s * constants::kBohrMagnetonEvPerTesla * b_tesla[2] * spin_z;
}

}  // namespace emshift
