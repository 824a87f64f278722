#include "emshift/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "emshift/phys_units.hpp"
#include "emshift/shift_engine.hpp"
#include "emshift/sweep.hpp"
#include "emshift/verify.hpp"

namespace emshift::cli {

namespace {

struct ShiftArgs {
  double k = 0.0;
  double mass = constants::kElectronMassMeV;
  std::string lambda_plus = "1,0";
  std::string lambda_minus = "0,0";
  PotentialAverages a;
  std::string mode = "full";
  std::string coupling = "unit";
};

struct SweepArgs {
  SweepConfig config;
  std::string out = "-";
};

int cmd_verify(std::optional<double> tolerance, std::ostream& out) {
  VerifyOptions options;
  options.tolerance = tolerance;
  const VerifyReport report = run_verification(options);
  print_report(out, report);
  return report.ok() ? kSuccess : kVerificationFailure;
}

void print_row(std::ostream& out, const std::string& label, double oracle, double closed) {
  out << std::left << std::setw(8) << label << std::right << std::setw(22) << oracle << std::setw(22) << closed
      << std::setw(14) << std::abs(oracle - closed) << "\n";
}

int cmd_shift(const ShiftArgs& args, std::ostream& out, std::ostream& err) {
  const auto lp = parse_complex(args.lambda_plus);
  const auto lm = parse_complex(args.lambda_minus);
  if (!lp || !lm) {
    err << "shift: --lambda-plus/--lambda-minus expect RE,IM\n";
    return kUsageError;
  }
  const TreatmentMode mode = args.mode == "nrl" ? TreatmentMode::NRL : TreatmentMode::Full;
  const double charge = args.coupling == "natural" ? constants::natural_charge() : 1.0;

  try {
    const ElectronState state(FourMomentum::along_z(args.k, args.mass), *lp, *lm);
    const ShiftResult oracle = shift_oracle(state, args.a, mode, charge);
    const ShiftResult closed =
        mode == TreatmentMode::Full ? shift_full(state, args.a, charge) : shift_nrl(state, args.a, charge);

    out << std::setprecision(12);
    out << "mode      " << to_string(mode) << "\n";
    out << "coupling  " << args.coupling << " (|e| = " << charge << ")\n";
    out << "k_mev     " << args.k << "\n";
    out << "E_mev     " << state.momentum().energy() << "\n";
    out << std::left << std::setw(8) << "term" << std::right << std::setw(22) << "oracle" << std::setw(22)
        << "closed_form" << std::setw(14) << "deviation" << "\n";
    static constexpr const char* kLabels[] = {"A0", "A1", "A2", "A3"};
    for (std::size_t i = 0; i < 4; ++i) print_row(out, kLabels[i], oracle.by_component[i], closed.by_component[i]);
    print_row(out, "total", oracle.total, closed.total);
  } catch (const std::invalid_argument& e) {
    err << "shift: " << e.what() << "\n";
    return kUsageError;
  }
  return kSuccess;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<SweepRow> rows;
  try {
    rows = compute_sweep(args.config);
  } catch (const std::invalid_argument& e) {
    err << "sweep: " << e.what() << "\n";
    return kUsageError;
  }
  if (args.out == "-") {
    write_sweep_csv(out, rows);
    return kSuccess;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) {
    err << "sweep: cannot open " << args.out << " for writing\n";
    return kUsageError;
  }
  write_sweep_csv(file, rows);
  file.close();
  if (!file) {
    err << "sweep: write to " << args.out << " failed\n";
    return kUsageError;
  }
  return kSuccess;
}

int cmd_scenario(const Scenario& sc, std::ostream& out, std::ostream& err) {
  ScenarioReport r;
  try {
    r = scenario_estimate(sc);
  } catch (const std::invalid_argument& e) {
    err << "scenario: " << e.what() << "\n";
    return kUsageError;
  }
  out << std::setprecision(6);
  out << "b_tesla                        " << sc.b_field_tesla << "\n";
  out << "d_meters                       " << sc.apparatus_scale_m << "\n";
  out << "gamma                          " << sc.lorentz_gamma << "\n";
  out << "a3_natural_mev                 " << r.a3_natural_mev << "\n";
  out << "shift_ultrarelativistic_mev    " << r.shift_ultrarelativistic_mev << "\n";
  out << "velocity                       " << r.velocity << "\n";
  out << "shift_at_gamma_mev             " << r.shift_at_gamma_mev << "\n";
  out << "ratio                          ";
  if (std::isinf(r.ratio))
    out << "inf\n";
  else
    out << r.ratio << "\n";
  out << "zeeman_ev                      " << r.zeeman_ev << "\n";
  out << "reference_shift_mev            " << r.reference_shift_mev << "\n";
  out << "reference_over_estimate        " << r.reference_over_estimate << "\n";
  out << "estimate_over_mass             " << r.estimate_over_mass << "\n";
  out << "reference_at_gamma_over_mass   " << r.reference_at_gamma_over_mass << "\n";
  return kSuccess;
}

}  // namespace

std::optional<Complex> parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  if (!(in >> re)) return std::nullopt;
  char sep = 0;
  if (in >> sep) {
    if (sep != ',' || !(in >> im)) return std::nullopt;
    char extra = 0;
    if (in >> extra) return std::nullopt;
  }
  if (!std::isfinite(re) || !std::isfinite(im)) return std::nullopt;
  return Complex{re, im};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-order electromagnetic energy shifts of free-electron states"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run the algebra, spinor, identity, oracle and halving suites");
  std::optional<double> tolerance;
  verify->add_option("--tolerance", tolerance, "Override every check's tolerance");

  ShiftArgs shift_args;
  auto* shift = app.add_subcommand("shift", "Energy shift of one state: oracle vs closed form");
  shift->add_option("--k", shift_args.k, "Momentum along z [MeV]");
  shift->add_option("--mass", shift_args.mass, "Particle mass [MeV]")->check(CLI::NonNegativeNumber);
  shift->add_option("--lambda-plus", shift_args.lambda_plus, "Spin-up coefficient RE,IM");
  shift->add_option("--lambda-minus", shift_args.lambda_minus, "Spin-down coefficient RE,IM");
  shift->add_option("--a0", shift_args.a.a0, "Averaged A0");
  shift->add_option("--a1", shift_args.a.a1, "Averaged A1");
  shift->add_option("--a2", shift_args.a.a2, "Averaged A2");
  shift->add_option("--a3", shift_args.a.a3, "Averaged A3");
  shift->add_option("--mode", shift_args.mode, "full | nrl")->check(CLI::IsMember({"full", "nrl"}));
  shift->add_option("--coupling", shift_args.coupling, "natural (|e| = sqrt(4 pi alpha)) | unit (|e| = 1)")
      ->check(CLI::IsMember({"natural", "unit"}));

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Normalized shifts vs momentum, as CSV");
  sweep->add_option("--k-min", sweep_args.config.k_min, "Lowest momentum [MeV]");
  sweep->add_option("--k-max", sweep_args.config.k_max, "Highest momentum [MeV]");
  sweep->add_option("--steps", sweep_args.config.steps, "Grid points, endpoints included");
  sweep->add_option("--mass", sweep_args.config.mass, "Particle mass [MeV]");
  sweep->add_option("--out", sweep_args.out, "Output path, '-' for stdout");

  Scenario scenario;
  auto* scen = app.add_subcommand("scenario", "Weak bar-magnet estimate");
  scen->add_option("--b-tesla", scenario.b_field_tesla, "Magnetic field [T]");
  scen->add_option("--d-meters", scenario.apparatus_scale_m, "Apparatus scale [m]");
  scen->add_option("--gamma", scenario.lorentz_gamma, "Lorentz factor of the slow electron");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0, everything else is a usage error
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  if (verify->parsed()) return cmd_verify(tolerance, out);
  if (shift->parsed()) return cmd_shift(shift_args, out, err);
  if (sweep->parsed()) return cmd_sweep(sweep_args, out, err);
  return cmd_scenario(scenario, out, err);
}

}  // namespace emshift::cli
