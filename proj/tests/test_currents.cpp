#include <doctest.h>

#include "test_support.hpp"

using namespace emshift;
using namespace emshift::testing;

TEST_CASE("pure spin-z eigenstates") {
  for (double kz : {0.0, 0.3, 2.0, 40.0}) {
    const FourMomentum p = FourMomentum::along_z(kz);
    const double e = p.energy();

    const BilinearDensities up = bilinear_densities(ElectronState(p, 1.0, 0.0));
    CHECK(up.rho0 == doctest::Approx(2 * e).epsilon(1e-14));
    CHECK(up.s[0] == 0.0);
    CHECK(up.s[1] == 0.0);
    CHECK(up.s[2] == doctest::Approx(e).epsilon(1e-14));
    CHECK(std::abs(up.s_prime[2] - kz) < 1e-13 * e);
    CHECK(up.normalized().s[2] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(up.normalized().s_prime[2] - kz / (2 * e)) < 1e-14);

    const BilinearDensities dn = bilinear_densities(ElectronState(p, 0.0, 1.0));
    CHECK(dn.s[0] == 0.0);
    CHECK(dn.s[1] == 0.0);
    CHECK(dn.s[2] == doctest::Approx(-e).epsilon(1e-14));
    CHECK(std::abs(dn.s_prime[2] - kz) < 1e-13 * e);
  }
}

TEST_CASE("rho0 equals the norm coefficient for every state") {
  for (int i = 0; i < 300; ++i) {
    const ElectronState s = random_state();
    const BilinearDensities d = bilinear_densities(s);
    CHECK(rel_err(d.rho0, d.norm) < 1e-13);
  }
}

TEST_CASE("configuration elements") {
  const FourMomentum p = FourMomentum::along_z(1.3);
  // disjoint support: identity has no opposite-spin element
  CHECK(configuration_element(Spin::Up, Spin::Down, p, Matrix4::identity()).coefficient == Complex{0, 0});
  const BoxMatrixElement same = configuration_element(Spin::Down, Spin::Down, p, Matrix4::identity());
  CHECK(same.volume_power == 1);
  CHECK(same.coefficient.real() == doctest::Approx(2 * p.energy()));
}

TEST_CASE("shift_vector_identity_check") {
  const FourMomentum p = FourMomentum::along_z(0.8);
  CHECK(shift_vector_identity_check(ElectronState(p, 1.0, 0.0)) == 0.0);
  const double h = std::sqrt(0.5);
  CHECK(shift_vector_identity_check(ElectronState(p, h, Complex{0, h})) < 1e-12);
  for (int i = 0; i < 1000; ++i) CHECK(shift_vector_identity_check(random_state()) < 1e-12);
}

TEST_CASE("two routes to the transformed spin current agree") {
  for (int i = 0; i < 1000; ++i) {
    const ElectronState s = random_state();
    CHECK(transformed_current_route_deviation(s) < 1e-12);
    CHECK_NOTHROW(bilinear_densities(s));
  }
}

TEST_CASE("spin current and transformed current differ only by the upper-block sign") {
  for (int i = 0; i < 200; ++i) {
    DiracSpinor psi = random_spinor();
    const Vec3 s = spin_current(psi);
    const Vec3 sp = transformed_spin_current(psi);
    DiracSpinor upper_only = psi;
    upper_only[2] = upper_only[3] = 0.0;
    const Vec3 up = spin_current(upper_only);
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs((s[c] - sp[c]) - 2 * up[c]) < 1e-14);
    // matrix route for a bare spinor
    for (int p = 1; p <= 3; ++p) {
      const auto [a, b] = spin_pair(p);
      CHECK(std::abs(0.5 * sandwich(psi, sigma_ab(a, b), psi).real() - s[p - 1]) < 1e-14);
      CHECK(std::abs(0.5 * sandwich(psi, gamma5() * sigma_ab(a, b), psi).real() - sp[p - 1]) < 1e-14);
    }
  }
}

TEST_CASE("hamiltonian_density: component form matches alpha.k + m beta for any spinor and momentum") {
  for (int i = 0; i < 500; ++i) {
    const DiracSpinor psi = random_spinor();
    const FourMomentum p({uniform(-5, 5), uniform(-5, 5), uniform(-5, 5)}, uniform(0, 2));
    const double component = hamiltonian_density(psi, p.k(), p.mass());
    const double matrix = sandwich(psi, free_hamiltonian_matrix(p), psi).real();
    CHECK(std::abs(component - matrix) < 1e-12);
  }
}

TEST_CASE("free_energy_density") {
  const FourMomentum rest = FourMomentum::along_z(0.0, 0.511);
  CHECK(free_energy_density(ElectronState(rest, 1.0, 0.0)) == doctest::Approx(0.511).epsilon(1e-15));

  // sqrt(0.511^2 + 3^2) at 30 digits
  const FourMomentum p = FourMomentum::along_z(3.0, 0.511);
  CHECK(rel_err(free_energy_density(ElectronState(p, 1.0, 0.0)), 3.04320899709500728) < 1e-14);
  CHECK(rel_err(free_energy_density(ElectronState(p, 0.6, Complex{0, 0.8})), 3.04320899709500728) < 1e-14);

  for (int i = 0; i < 300; ++i) {
    const ElectronState s = random_state(1000.0, uniform(0.0, 5.0));
    CHECK(rel_err(free_energy_density(s), s.momentum().energy()) < 1e-12);
  }
}
