#include "emshift/verify.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "emshift/shift_engine.hpp"

namespace emshift {

namespace {

constexpr Complex kI{0.0, 1.0};

class SuiteRunner {
public:
  SuiteRunner(std::string name, const VerifyOptions& options) : options_(options) {
    report_.name = std::move(name);
  }

  void check(const std::string& property, double deviation, double default_tolerance) {
    const double tol = options_.tolerance.value_or(default_tolerance);
    if (std::isfinite(deviation) && deviation <= tol) {
      ++report_.passed;
    } else {
      report_.failures.push_back({property, deviation, tol, default_tolerance});
    }
  }

  SuiteReport take() { return std::move(report_); }

private:
  const VerifyOptions& options_;
  SuiteReport report_;
};

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

struct RandomCase {
  FourMomentum p;
  Complex lp;
  Complex lm;
  PotentialAverages a;
};

RandomCase draw_case(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> k_dist(0.0, 100.0);
  std::uniform_real_distribution<double> a_dist(-1.0, 1.0);
  std::normal_distribution<double> gauss;
  Complex lp{gauss(rng), gauss(rng)};
  Complex lm{gauss(rng), gauss(rng)};
  const double n = std::sqrt(std::norm(lp) + std::norm(lm));
  const double k = k_dist(rng);
  return {FourMomentum::along_z(k), lp / n, lm / n,
          PotentialAverages{a_dist(rng), a_dist(rng), a_dist(rng), a_dist(rng)}};
}

double oracle_scale(const FourMomentum& p, const PotentialAverages& a, double charge) {
  const double boost = p.mass() > 0.0 ? p.energy() / p.mass() : 1.0;
  return std::abs(charge) * std::max(a.max_abs(), 1e-300) * std::max(1.0, boost);
}

double result_deviation(const ShiftResult& x, const ShiftResult& y, double scale) {
  double worst = std::abs(x.total - y.total);
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(x.by_component[i] - y.by_component[i]));
  return worst / scale;
}

std::vector<double> spinor_grid() {
  std::vector<double> g{0.0};
  for (int i = 0; i <= 60; ++i) g.push_back(std::pow(10.0, -3.0 + 6.0 * i / 60.0));
  return g;
}

SuiteReport clifford_suite(const VerifyOptions& opt) {
  SuiteRunner run("clifford", opt);
  const GammaSet& gs = opt.gammas;
  const Matrix4 id = Matrix4::identity();

  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      worst = std::max(worst, max_abs_diff(anticommutator(gs.gamma[mu], gs.gamma[nu]),
                                           2.0 * metric(mu, nu) * id));
  run.check("{gamma^mu, gamma^nu} = 2 g^{mu nu} I", worst, 1e-14);

  const Matrix4 product = kI * (gs.gamma[0] * gs.gamma[1] * gs.gamma[2] * gs.gamma[3]);
  run.check("gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3", max_abs_diff(gs.gamma5, product), 1e-14);
  run.check("gamma^5 = diag(-I2, I2)",
            max_abs_diff(gs.gamma5, block_diag(-Matrix2::identity(), Matrix2::identity())), 1e-14);
  run.check("(gamma^5)^2 = I", max_abs_diff(gs.gamma5 * gs.gamma5, id), 1e-14);

  worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    worst = std::max(worst, max_abs_diff(anticommutator(gs.gamma5, gs.gamma[mu]), Matrix4::zero()));
  run.check("{gamma^5, gamma^mu} = 0", worst, 1e-14);

  worst = 0.0;
  double herm = 0.0;
  for (int p = 1; p <= 3; ++p) {
    const auto [a, b] = spin_pair(p);
    const Matrix4 sig = kI * (gs.gamma[a] * gs.gamma[b]);
    const Matrix2 s = pauli(p);
    worst = std::max(worst, max_abs_diff(gs.gamma5 * sig, block_diag(-s, s)));
    herm = std::max(herm, max_abs_diff(sig, sig.adjoint()));
  }
  run.check("gamma^5 sigma^ab = diag(-sigma_p, sigma_p)", worst, 1e-14);
  run.check("sigma^ab hermitian", herm, 1e-14);

  herm = max_abs_diff(gs.gamma[0], gs.gamma[0].adjoint());
  for (int i = 1; i <= 3; ++i) herm = std::max(herm, max_abs_diff(gs.gamma[i], -gs.gamma[i].adjoint()));
  run.check("gamma^0 hermitian, gamma^i anti-hermitian", herm, 1e-14);

  const Matrix4 pr = 0.5 * (id + gs.gamma5);
  const Matrix4 pl = 0.5 * (id - gs.gamma5);
  run.check("chiral projectors idempotent",
            std::max(max_abs_diff(pr * pr, pr), max_abs_diff(pl * pl, pl)), 1e-14);
  run.check("chiral projectors complete", max_abs_diff(pr + pl, id), 1e-14);
  run.check("chiral projectors orthogonal", max_abs_diff(pr * pl, Matrix4::zero()), 1e-14);
  return run.take();
}

SuiteReport spinor_suite(const VerifyOptions& opt) {
  SuiteRunner run("spinors", opt);
  double norm_dev = 0.0, scalar_dev = 0.0, residual = 0.0, ortho = 0.0;
  for (double k : spinor_grid()) {
    const FourMomentum p = FourMomentum::along_z(k);
    const DiracSpinor up = dirac_spinor(Spin::Up, p);
    const DiracSpinor down = dirac_spinor(Spin::Down, p);
    for (const DiracSpinor* u : {&up, &down}) {
      norm_dev = std::max(norm_dev, rel(u->norm_squared(), 2.0 * p.energy()));
      scalar_dev = std::max(scalar_dev, rel(scalar_density(*u), 2.0 * p.mass()));
      residual = std::max(residual, dirac_equation_residual(*u, p));
    }
    ortho = std::max(ortho, std::abs(inner(up, down)));
  }
  run.check("u^dagger u = 2E", norm_dev, 1e-12);
  run.check("u-bar u = 2m", scalar_dev, 1e-12);
  run.check("Dirac equation residual", residual, 1e-12);
  run.check("u_up^dagger u_down = 0", ortho, 1e-14);

  double consistency = 0.0;
  for (Spin s : {Spin::Up, Spin::Down}) {
    const TwoSpinor xi = two_spinor(SpinAxis::z(), s);
    const DiracSpinor u = dirac_spinor(s, FourMomentum::along_z(0.0, 1.0));
    // at rest with m = 1 both halves of u equal xi
    for (std::size_t i = 0; i < 2; ++i)
      consistency = std::max({consistency, std::abs(u[i] - xi[i]), std::abs(u[i + 2] - xi[i])});
  }
  run.check("two_spinor(z) matches spin-z spinors", consistency, 1e-14);
  return run.take();
}

SuiteReport identity_suite(const VerifyOptions& opt) {
  SuiteRunner run("identities", opt);
  std::mt19937_64 rng(opt.seed);
  double shift_vec = 0.0, routes = 0.0, energy = 0.0;
  for (int i = 0; i < opt.random_states; ++i) {
    const RandomCase c = draw_case(rng);
    const ElectronState st(c.p, c.lp, c.lm);
    shift_vec = std::max(shift_vec, shift_vector_identity_check(st));
    routes = std::max(routes, transformed_current_route_deviation(st));
    energy = std::max(energy, rel(free_energy_density(st), c.p.energy()));
  }
  run.check("energy-shift vector = transformed spin current", shift_vec, 1e-12);
  run.check("transformed spin current: component route = matrix route", routes, 1e-12);
  run.check("free Hamiltonian density / norm = E", energy, 1e-12);

  double same_spin = 0.0, cross_a0 = 0.0;
  for (double k : spinor_grid()) {
    const FourMomentum p = FourMomentum::along_z(k);
    const double scale = 2.0 * p.energy();
    for (Spin s : {Spin::Up, Spin::Down}) {
      const Complex el = mode_element(s, s, p, 2.0 * shift_operator(3), TreatmentMode::Full).coefficient;
      same_spin = std::max(same_spin, std::abs(el - 2.0 * p.kz()) / scale);
    }
    cross_a0 = std::max(cross_a0,
                        std::abs(mode_element(Spin::Up, Spin::Down, p, shift_operator(0), TreatmentMode::Full)
                                     .coefficient) /
                            scale);
  }
  run.check("same-spin A3 bilinear = 2|k| V", same_spin, 1e-12);
  run.check("opposite-spin A0 bilinear vanishes", cross_a0, 1e-14);
  return run.take();
}

SuiteReport oracle_suite(const VerifyOptions& opt) {
  SuiteRunner run("oracle", opt);
  std::mt19937_64 rng(opt.seed + 1);
  double full = 0.0, nrl = 0.0, cancel = 0.0, lambda_free = 0.0;
  for (int i = 0; i < opt.random_states; ++i) {
    const RandomCase c = draw_case(rng);
    const ElectronState st(c.p, c.lp, c.lm);
    const double scale = oracle_scale(c.p, c.a, 1.0);
    const ShiftResult of = shift_oracle(st, c.a, TreatmentMode::Full);
    full = std::max(full, result_deviation(of, shift_full(st, c.a), scale));
    nrl = std::max(nrl, result_deviation(shift_oracle(st, c.a, TreatmentMode::NRL), shift_nrl(st, c.a), scale));
    cancel = std::max({cancel, std::abs(of.by_component[1]) / scale, std::abs(of.by_component[2]) / scale});
    const ElectronState pure(c.p, 1.0, 0.0);
    lambda_free = std::max(lambda_free, result_deviation(of, shift_oracle(pure, c.a, TreatmentMode::Full), scale));
  }
  run.check("oracle(full) = closed form", full, 1e-12);
  run.check("oracle(nrl) = closed form", nrl, 1e-12);
  run.check("A1, A2 contributions vanish (full)", cancel, 1e-13);
  run.check("full shift independent of lambda", lambda_free, 1e-13);
  return run.take();
}

SuiteReport halving_suite(const VerifyOptions& opt) {
  SuiteRunner run("halving", opt);
  const PotentialAverages unit = PotentialAverages::uniform(1.0);
  double electric = 0.0, magnetic = 0.0, decomposition = 0.0, chiral = 0.0;
  for (double k : spinor_grid()) {
    const FourMomentum p = FourMomentum::along_z(k);
    const ShiftResult full = shift_full(ElectronState(p, 1.0, 0.0), unit);
    const ShiftResult achiral = shift_nrl_achiral(p, unit);
    electric = std::max(electric, std::abs(achiral.by_component[0] - 0.5 * full.by_component[0]));
    magnetic = std::max(magnetic, std::abs(achiral.by_component[3] - 0.5 * full.by_component[3]));
    const ShiftDifferences d = shift_differences(p, unit);
    decomposition = std::max(decomposition, std::abs(d.decomposition_residual));
    const ElectronState st(p, Complex{0.6, 0.0}, Complex{0.0, 0.8});
    chiral = std::max(chiral, std::abs(shift_nrl_chiral_form(st, 1.0) - shift_nrl(st, unit).electric()));
  }
  run.check("NRL achiral electric = full electric / 2", electric, 1e-14);
  run.check("NRL fixed magnetic = full magnetic / 2", magnetic, 1e-14);
  run.check("L - R = (L - achiral) + (achiral - R)", decomposition, 1e-14);
  run.check("chirality form = NRL electric shift", chiral, 1e-14);
  return run.take();
}

}  // namespace

bool VerifyReport::ok() const {
  for (const auto& s : suites)
    if (!s.failures.empty()) return false;
  return true;
}

const SuiteReport* VerifyReport::suite(const std::string& name) const {
  for (const auto& s : suites)
    if (s.name == name) return &s;
  return nullptr;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.suites.push_back(clifford_suite(options));
  report.suites.push_back(spinor_suite(options));
  report.suites.push_back(identity_suite(options));
  report.suites.push_back(oracle_suite(options));
  report.suites.push_back(halving_suite(options));
  return report;
}

void print_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& s : report.suites) {
    out << "suite " << s.name << ": " << s.passed << "/" << s.total() << " passed\n";
    for (const auto& f : s.failures) {
      out << "  FAIL [" << (f.precision_floor() ? "precision-floor" : "logic") << "] " << f.property
          << ": deviation " << f.deviation << " > tolerance " << f.tolerance << "\n";
    }
  }
  out << (report.ok() ? "verify: all suites passed\n" : "verify: FAILED\n");
}

}  // namespace emshift
