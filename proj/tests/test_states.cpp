#include <doctest.h>

#include "test_support.hpp"

using namespace emshift;
using namespace emshift::testing;

TEST_CASE("state_norm") {
  const FourMomentum rest = FourMomentum::along_z(0.0, 0.511);
  const RegularizedNorm n1 = state_norm(ElectronState(rest, 1.0, 0.0));
  CHECK(n1.coefficient == doctest::Approx(2 * 0.511).epsilon(1e-15));
  CHECK(n1.volume_power == 1);

  const double h = std::sqrt(0.5);
  CHECK(state_norm(ElectronState(FourMomentum::along_z(0.0, 1.0), h, h)).coefficient ==
        doctest::Approx(2.0).epsilon(1e-15));

  // coefficients are not forced to unit norm
  const FourMomentum p = FourMomentum::along_z(1.7);
  CHECK(state_norm(ElectronState(p, 2.0, 0.0)).coefficient == doctest::Approx(8 * p.energy()).epsilon(1e-15));

  CHECK_THROWS_AS(ElectronState(p, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ElectronState(p, Complex{NAN, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("box volume only cancels in matched ratios") {
  const BoxQuantity num{6.0, 1};
  const BoxQuantity den{2.0, 1};
  CHECK(cancel_volume(num, den) == 3.0);
  CHECK_THROWS_AS(cancel_volume(BoxQuantity{6.0, 2}, den), std::logic_error);
  CHECK_THROWS_AS(cancel_volume(num, BoxQuantity{0.0, 1}), std::domain_error);
  CHECK_THROWS_AS(num + BoxQuantity(1.0, 0), std::logic_error);
  CHECK((num + den).coefficient == 8.0);
  CHECK((0.5 * num).coefficient == 3.0);
}

TEST_CASE("chirality_expectation examples") {
  const FourMomentum p = FourMomentum::along_z(3.0);
  CHECK(chirality_expectation(ElectronState(p, 1.0, 0.0)) == 0.5);
  const double h = std::sqrt(0.5);
  CHECK(chirality_expectation(ElectronState(p, h, h)) == doctest::Approx(0.0));
  CHECK(chirality_expectation(ElectronState(p, std::sqrt(0.75), std::sqrt(0.25))) ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(chirality_expectation(ElectronState(p, 0.0, Complex{0, 3})) == -0.5);
}

TEST_CASE("chirality_expectation: rescaling, phase and swap properties") {
  for (int i = 0; i < 500; ++i) {
    const ElectronState s = random_state();
    const double x = chirality_expectation(s);
    CHECK(x >= -0.5);
    CHECK(x <= 0.5);

    const Complex c = std::polar(uniform(1e-3, 1e3), uniform(0, 6.28));
    const ElectronState scaled(s.momentum(), c * s.lambda_plus(), c * s.lambda_minus());
    CHECK(std::abs(chirality_expectation(scaled) - x) < 1e-14);

    const ElectronState swapped(s.momentum(), s.lambda_minus(), s.lambda_plus());
    CHECK(std::abs(chirality_expectation(swapped) + x) < 1e-15);
  }
}
