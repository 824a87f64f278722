#include "emshift/algebra.hpp"

#include <stdexcept>
#include <string>

namespace emshift {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_spatial(int a, const char* what) {
  if (a < 1 || a > 3)
    throw std::out_of_range(std::string(what) + ": spatial index must be 1..3, got " +
                            std::to_string(a));
}

}  // namespace

Matrix2 pauli(int p) {
  require_spatial(p, "pauli");
  Matrix2 s;
  switch (p) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      break;
    default:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
  }
  return s;
}

Matrix4 block_diag(const Matrix2& upper_left, const Matrix2& lower_right) {
  Matrix4 m;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      m(r, c) = upper_left(r, c);
      m(r + 2, c + 2) = lower_right(r, c);
    }
  return m;
}

Matrix4 block_offdiag(const Matrix2& upper_right, const Matrix2& lower_left) {
  Matrix4 m;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      m(r, c + 2) = upper_right(r, c);
      m(r + 2, c) = lower_left(r, c);
    }
  return m;
}

double metric(int mu, int nu) {
  if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw std::out_of_range("metric: index must be 0..3");
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

Matrix4 gamma(int mu) {
  if (mu == 0) return block_offdiag(Matrix2::identity(), Matrix2::identity());
  if (mu < 0 || mu > 3)
    throw std::out_of_range("gamma: index must be 0..3, got " + std::to_string(mu));
  const Matrix2 s = pauli(mu);
  return block_offdiag(s, -s);
}

Matrix4 gamma5() { return block_diag(-Matrix2::identity(), Matrix2::identity()); }

Matrix4 gamma5_from_product() { return kI * (gamma(0) * gamma(1) * gamma(2) * gamma(3)); }

Matrix4 sigma_ab(int a, int b) {
  require_spatial(a, "sigma_ab");
  require_spatial(b, "sigma_ab");
  if (a == b) throw std::invalid_argument("sigma_ab: a == b is not a spin component");
  return kI * (gamma(a) * gamma(b));
}

int spin_component(int a, int b) {
  require_spatial(a, "spin_component");
  require_spatial(b, "spin_component");
  if (a == b) throw std::invalid_argument("spin_component: a == b");
  return 6 - a - b;
}

std::array<int, 2> spin_pair(int p) {
  require_spatial(p, "spin_pair");
  switch (p) {
    case 1: return {2, 3};
    case 2: return {3, 1};
    default: return {1, 2};
  }
}

Matrix4 chiral_projector(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("chiral_projector: sign must be +1 or -1");
  return 0.5 * (Matrix4::identity() + static_cast<double>(sign) * gamma5());
}

GammaSet GammaSet::weyl() {
  return GammaSet{{emshift::gamma(0), emshift::gamma(1), emshift::gamma(2), emshift::gamma(3)}, emshift::gamma5()};
}

}  // namespace emshift
