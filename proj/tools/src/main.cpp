// noonsim: reproducible analysis of noon-state preparation under imperfect
// phase control. Subcommands: prepare, curve, bootstrap, estimate, fisher.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "noon/errors.hpp"
#include "output.hpp"

namespace {

struct CommonOptions {
  std::string format;  // resolved per command below
  std::string output = "-";
  int digits = 17;
  int threads = 1;
  bool in_units_of_pi = false;
};

int write_bytes(const std::string& path, const std::string& bytes) {
  if (path == "-") {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << noonsim::error_json("io", "cannot open output file: " + path);
    return 5;
  }
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  return file ? 0 : 5;
}

int emit(const CommonOptions& common, noonsim::Report report) {
  report.config.emplace_back("format", noonsim::Cell::text(common.format));
  report.config.emplace_back("output", noonsim::Cell::text(common.output));
  report.config.emplace_back("digits", noonsim::Cell::integer(common.digits));
  report.config.emplace_back(
      "in-units-of-pi", noonsim::Cell::boolean(common.in_units_of_pi));

  const std::string bytes = common.format == "json"
                                ? noonsim::to_json(report)
                                : noonsim::to_csv(report, common.digits);
  const int io_status = write_bytes(common.output, bytes);
  if (io_status != 0) return io_status;
  if (report.error.has_value()) {
    std::cerr << noonsim::error_json(report.error->code, report.error->message);
  }
  return report.exit_code;
}

int run_guarded(const CommonOptions& common,
                const std::function<noonsim::Report()>& command) {
  try {
    return emit(common, command());
  } catch (const noon::CapacityError& e) {
    std::cerr << noonsim::error_json("capacity", e.what());
    return 2;
  } catch (const noon::Error& e) {
    std::cerr << noonsim::error_json("domain", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::cerr << noonsim::error_json("internal", e.what());
    return 5;
  }
}

double resolve_angle(double value, bool in_units_of_pi) {
  return in_units_of_pi ? value * std::numbers::pi : value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "noonsim: noisy noon-state preparation, phase sensitivity and "
      "bootstrapped calibration planning"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_config("--config", "", "Read defaults from an INI/TOML file");

  CommonOptions common;
  app.add_option("--output", common.output, "Output path ('-' for stdout)")
      ->capture_default_str();
  app.add_option("--digits", common.digits,
                 "Significant digits in CSV numbers")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  app.add_option("--threads", common.threads,
                 "Worker threads (no effect on results)")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_flag("--in-units-of-pi", common.in_units_of_pi,
               "Interpret phase arguments as multiples of pi");
  std::string format;
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // prepare ------------------------------------------------------------
  noonsim::PrepareOptions prepare;
  CLI::App* prepare_cmd = app.add_subcommand(
      "prepare", "Build the noisy preparation state and report its quality");
  prepare_cmd->add_option("--n", prepare.photon_number, "Photon number N")
      ->required()
      ->check(CLI::PositiveNumber);
  prepare_cmd->add_option("--delta", prepare.delta, "Phase variance (rad^2)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  prepare_cmd->add_option("--method", prepare.method, "exact or mc")
      ->check(CLI::IsMember({"exact", "mc"}))
      ->capture_default_str();
  prepare_cmd->add_option("--samples", prepare.samples, "Monte Carlo samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  prepare_cmd->add_option("--seed", prepare.seed, "Monte Carlo seed")
      ->capture_default_str();
  prepare_cmd
      ->add_option("--photon-cap", prepare.photon_cap,
                   "Size cap for the exact average")
      ->capture_default_str();
  prepare_cmd->add_flag("--emit-matrix", prepare.emit_matrix,
                        "Include the full density matrix");

  // curve ----------------------------------------------------------------
  noonsim::CurveOptions curve;
  CLI::App* curve_cmd = app.add_subcommand(
      "curve", "Phase-sensitivity bound versus photon number");
  curve_cmd->add_option("--delta", curve.delta, "Phase variance (rad^2)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  curve_cmd->add_option("--n-min", curve.n_min, "Smallest N")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  curve_cmd->add_option("--n-max", curve.n_max, "Largest N")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // bootstrap --------------------------------------------------------------
  noonsim::BootstrapOptions bootstrap;
  double delta0 = 0.0;
  double sqrt_delta0 = 0.0;
  CLI::App* bootstrap_cmd = app.add_subcommand(
      "bootstrap", "Plan bootstrapped phase-calibration iterations");
  CLI::Option* delta0_option =
      bootstrap_cmd->add_option("--delta0", delta0, "Initial variance (rad^2)");
  CLI::Option* sqrt_delta0_option = bootstrap_cmd->add_option(
      "--sqrt-delta0", sqrt_delta0, "Initial phase error (rad)");
  delta0_option->excludes(sqrt_delta0_option);
  bootstrap_cmd->add_option("--steps", bootstrap.steps, "Iterations to plan")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bootstrap_cmd
      ->add_option("--method", bootstrap.method,
                   "exact, closed-form, or both")
      ->check(CLI::IsMember({"exact", "closed-form", "both"}))
      ->capture_default_str();

  // estimate ---------------------------------------------------------------
  noonsim::EstimateOptions estimate;
  CLI::App* estimate_cmd = app.add_subcommand(
      "estimate", "Monte Carlo check of the Cramer-Rao bound");
  estimate_cmd->add_option("--n", estimate.photon_number, "Photon number N")
      ->required()
      ->check(CLI::PositiveNumber);
  estimate_cmd->add_option("--delta", estimate.delta, "Phase variance (rad^2)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  estimate_cmd->add_option("--phi-true", estimate.phi_true, "True phase (rad)")
      ->required();
  estimate_cmd->add_option("--shots", estimate.shots, "Detections per trial")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  estimate_cmd->add_option("--trials", estimate.trials, "Independent trials")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  estimate_cmd->add_option("--seed", estimate.seed, "Simulation seed")
      ->capture_default_str();

  // fisher ------------------------------------------------------------------
  noonsim::FisherOptions fisher;
  CLI::App* fisher_cmd = app.add_subcommand(
      "fisher", "Three-way Fisher-information comparison on a phase grid");
  fisher_cmd->add_option("--n", fisher.photon_number, "Photon number N")
      ->required()
      ->check(CLI::PositiveNumber);
  fisher_cmd->add_option("--delta", fisher.delta, "Phase variance (rad^2)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  fisher_cmd->add_option("--phi-min", fisher.phi_min, "Grid start (rad)")
      ->capture_default_str();
  fisher_cmd->add_option("--phi-max", fisher.phi_max,
                         "Grid end (rad, default pi/N)");
  fisher_cmd->add_option("--points", fisher.points, "Grid points")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();
  fisher_cmd->add_option("--step", fisher.step,
                         "Numeric differentiation step (rad)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (prepare_cmd->parsed()) {
    common.format = format.empty() ? "json" : format;
    prepare.threads = common.threads;
    return run_guarded(common, [&] { return noonsim::run_prepare(prepare); });
  }
  if (curve_cmd->parsed()) {
    common.format = format.empty() ? "csv" : format;
    return run_guarded(common, [&] { return noonsim::run_curve(curve); });
  }
  if (bootstrap_cmd->parsed()) {
    common.format = format.empty() ? "csv" : format;
    if (delta0_option->count() > 0) bootstrap.delta0 = delta0;
    if (sqrt_delta0_option->count() > 0) bootstrap.sqrt_delta0 = sqrt_delta0;
    return run_guarded(common,
                       [&] { return noonsim::run_bootstrap(bootstrap); });
  }
  if (estimate_cmd->parsed()) {
    common.format = format.empty() ? "json" : format;
    estimate.phi_true = resolve_angle(estimate.phi_true, common.in_units_of_pi);
    estimate.threads = common.threads;
    return run_guarded(common,
                       [&] { return noonsim::run_estimate(estimate); });
  }
  if (fisher_cmd->parsed()) {
    common.format = format.empty() ? "csv" : format;
    fisher.phi_min = resolve_angle(fisher.phi_min, common.in_units_of_pi);
    fisher.phi_max = resolve_angle(fisher.phi_max, common.in_units_of_pi);
    return run_guarded(common, [&] { return noonsim::run_fisher(fisher); });
  }
  return 1;
}
