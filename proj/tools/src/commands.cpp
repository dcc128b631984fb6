#include "commands.hpp"

#include <cmath>
#include <numbers>

#include "noon/bootstrap.hpp"
#include "noon/estimation.hpp"
#include "noon/metrology.hpp"
#include "noon/noise.hpp"

namespace noonsim {

namespace {

constexpr double kPi = std::numbers::pi;

const Warning kNormalizationWarning{
    "overcomplete-normalization",
    "under the half-factorial normalization the extreme Fock populations are "
    "exactly 1/2 but the trace exceeds 1 for delta > 0; trace_one results "
    "divide by the computed trace"};

const Warning kFisherVariantWarning{
    "fisher-variant",
    "two closed forms are tabulated: fisher_rederived follows from "
    "differentiating the two-outcome probabilities (denominator "
    "exp(N*delta) - cos^2(N*phi)) and is the default; the commonly quoted "
    "fisher_cos_denominator variant differs away from phi = pi/2N"};

nlohmann::ordered_json matrix_to_json(const Eigen::MatrixXcd& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({{"re", m(r, c).real()}, {"im", m(r, c).imag()}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Report run_prepare(const PrepareOptions& options) {
  Report report;
  report.command = "prepare";
  report.config = {
      {"n", Cell::integer(options.photon_number)},
      {"delta", Cell::number(options.delta)},
      {"method", Cell::text(options.method)},
      {"samples", Cell::integer(static_cast<std::int64_t>(options.samples))},
      {"seed", Cell::integer(static_cast<std::int64_t>(options.seed))},
      {"photon-cap", Cell::integer(options.photon_cap)},
      {"emit-matrix", Cell::boolean(options.emit_matrix)},
  };

  const noon::NoiseModel model(options.photon_number, options.delta);
  const int n = options.photon_number;

  if (options.method == "exact") {
    const noon::ExactMixed mixed =
        noon::prepare_mixed_exact(model, options.photon_cap);
    const auto& half = mixed.half_factorial.matrix();
    report.scalars = {
        {"noon_fidelity", Cell::number(noon::noon_fidelity(mixed.trace_one))},
        {"noon_weight", Cell::number(noon::noon_weight(mixed.trace_one))},
        {"visibility", Cell::number(2.0 * std::abs(half(0, n)))},
        {"half_factorial_trace", Cell::number(mixed.trace)},
    };
    if (options.emit_matrix) {
      report.json_extras.emplace_back(
          "matrix_trace_one", matrix_to_json(mixed.trace_one.matrix()));
      report.json_extras.emplace_back("matrix_half_factorial",
                                      matrix_to_json(half));
      Table matrix_table;
      matrix_table.header = {"row", "col", "real", "imag"};
      for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) {
          matrix_table.rows.push_back(
              {Cell::integer(r), Cell::integer(c),
               Cell::number(mixed.trace_one.matrix()(r, c).real()),
               Cell::number(mixed.trace_one.matrix()(r, c).imag())});
        }
      }
      report.table = std::move(matrix_table);
    }
  } else {
    const noon::McMixed mixed = noon::prepare_mixed_mc(
        model, options.samples, options.seed, options.threads);
    const auto& half = mixed.half_factorial.matrix();
    const double visibility_se =
        2.0 * std::hypot(mixed.se_real(0, n), mixed.se_imag(0, n));
    report.scalars = {
        {"noon_fidelity", Cell::number(noon::noon_fidelity(mixed.trace_one))},
        {"noon_weight", Cell::number(noon::noon_weight(mixed.trace_one))},
        {"visibility", Cell::number(2.0 * std::abs(half(0, n)))},
        {"visibility_se", Cell::number(visibility_se)},
        {"half_factorial_trace",
         Cell::number(mixed.half_factorial.trace_real())},
    };
    if (options.emit_matrix) {
      report.json_extras.emplace_back(
          "matrix_trace_one", matrix_to_json(mixed.trace_one.matrix()));
      report.json_extras.emplace_back("matrix_half_factorial",
                                      matrix_to_json(half));
      Table matrix_table;
      matrix_table.header = {"row", "col", "real", "imag", "se_real",
                             "se_imag"};
      for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) {
          matrix_table.rows.push_back(
              {Cell::integer(r), Cell::integer(c),
               Cell::number(mixed.trace_one.matrix()(r, c).real()),
               Cell::number(mixed.trace_one.matrix()(r, c).imag()),
               Cell::number(mixed.se_real(r, c)),
               Cell::number(mixed.se_imag(r, c))});
        }
      }
      report.table = std::move(matrix_table);
    }
  }

  if (options.delta > 0.0) {
    report.warnings.push_back(kNormalizationWarning);
  }
  return report;
}

Report run_curve(const CurveOptions& options) {
  Report report;
  report.command = "curve";
  report.config = {
      {"delta", Cell::number(options.delta)},
      {"n-min", Cell::integer(options.n_min)},
      {"n-max", Cell::integer(options.n_max)},
  };

  const auto curve =
      noon::sensitivity_curve(options.delta, options.n_min, options.n_max);
  const std::size_t best = noon::argmin_delta_phi(curve);

  report.scalars = {
      {"minimum_n", Cell::integer(curve[best].photon_number)},
      {"minimum_delta_phi", Cell::number(curve[best].delta_phi_bound)},
  };

  Table table;
  table.header = {"n_photons", "delta_phi", "shot_noise_limit",
                  "heisenberg_limit", "is_minimum"};
  for (std::size_t i = 0; i < curve.size(); ++i) {
    table.rows.push_back({Cell::integer(curve[i].photon_number),
                          Cell::number(curve[i].delta_phi_bound),
                          Cell::number(curve[i].shot_noise_limit),
                          Cell::number(curve[i].heisenberg_limit),
                          Cell::integer(i == best ? 1 : 0)});
  }
  report.table = std::move(table);
  return report;
}

Report run_bootstrap(const BootstrapOptions& options) {
  Report report;
  report.command = "bootstrap";

  if (options.delta0.has_value() == options.sqrt_delta0.has_value()) {
    throw noon::InvalidArgumentError(
        "bootstrap requires exactly one of --delta0 and --sqrt-delta0");
  }
  const double delta0 = options.delta0.has_value()
                            ? *options.delta0
                            : (*options.sqrt_delta0) * (*options.sqrt_delta0);
  if (!(delta0 > 0.0)) {
    throw noon::InvalidArgumentError("bootstrap requires delta0 > 0");
  }

  report.config = {
      {"delta0", Cell::number(delta0)},
      {"sqrt-delta0", Cell::number(std::sqrt(delta0))},
      {"steps", Cell::integer(options.steps)},
      {"method", Cell::text(options.method)},
  };

  const noon::TrajectoryComparison cmp =
      noon::compare_trajectories(delta0, options.steps);
  const bool feasible = cmp.exact.feasible;
  const bool want_exact = options.method != "closed-form";
  const bool want_closed = options.method != "exact";

  report.scalars = {
      {"feasible", Cell::boolean(feasible)},
      {"threshold_sqrt_delta",
       Cell::number(noon::bootstrap_threshold_sqrt_delta())},
  };

  Table table;
  table.header = {"n",
                  "exact_delta",
                  "exact_sqrt_delta",
                  "exact_n_photons",
                  "exact_delta_phi",
                  "closed_form_delta",
                  "closed_form_sqrt_delta",
                  "closed_form_n_photons",
                  "closed_form_delta_phi",
                  "reference_n_photons"};
  const std::size_t rows = std::max(
      want_exact ? cmp.exact.iterations.size() : 0,
      want_closed ? cmp.closed_form.iterations.size() : 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Cell> row(10, Cell::empty());
    row[0] = Cell::integer(static_cast<std::int64_t>(i));
    if (want_exact && i < cmp.exact.iterations.size()) {
      const auto& it = cmp.exact.iterations[i];
      row[1] = Cell::number(it.delta);
      row[2] = Cell::number(it.sqrt_delta);
      row[3] = Cell::number(it.photon_number);
      row[4] = Cell::number(it.delta_phi);
    }
    if (want_closed && i < cmp.closed_form.iterations.size()) {
      const auto& it = cmp.closed_form.iterations[i];
      row[5] = Cell::number(it.delta);
      row[6] = Cell::number(it.sqrt_delta);
      row[7] = Cell::number(it.photon_number);
      row[8] = Cell::number(it.delta_phi);
    }
    if (i < cmp.reference_photons.size() && cmp.reference_photons[i]) {
      row[9] = Cell::number(*cmp.reference_photons[i]);
    }
    table.rows.push_back(std::move(row));
  }
  report.table = std::move(table);

  for (const std::string& message : cmp.warnings) {
    const std::size_t colon = message.find(':');
    report.warnings.push_back(
        {message.substr(0, colon), message.substr(colon + 2)});
  }

  if (!feasible) {
    report.warnings.push_back(
        {"infeasible",
         "sqrt(delta0) is not below 2/e; the recursion cannot improve the "
         "phase control and the exact schedule is empty"});
    report.exit_code = 3;
    report.error = Warning{"infeasible",
                           "bootstrap infeasible: sqrt(delta0) >= 2/e"};
  }
  return report;
}

Report run_estimate(const EstimateOptions& options) {
  Report report;
  report.command = "estimate";
  report.config = {
      {"n", Cell::integer(options.photon_number)},
      {"delta", Cell::number(options.delta)},
      {"phi-true", Cell::number(options.phi_true)},
      {"shots", Cell::integer(options.shots)},
      {"trials", Cell::integer(options.trials)},
      {"seed", Cell::integer(static_cast<std::int64_t>(options.seed))},
  };

  const noon::EstimationSummary summary = noon::verify_crb(
      options.photon_number, options.delta, options.phi_true, options.shots,
      options.trials, options.seed, options.threads);

  report.scalars = {
      {"phi_hat_mean", Cell::number(summary.phi_hat_mean)},
      {"empirical_std", Cell::number(summary.empirical_std)},
      {"crb_std", Cell::number(summary.crb_std)},
      {"ratio", Cell::number(summary.ratio)},
      {"trials", Cell::integer(summary.trials)},
      {"shots_per_trial", Cell::integer(summary.shots_per_trial)},
  };
  return report;
}

Report run_fisher(const FisherOptions& options) {
  Report report;
  report.command = "fisher";

  const int n = options.photon_number;
  const double phi_max =
      options.phi_max > 0.0 ? options.phi_max : kPi / static_cast<double>(n);
  if (options.points < 2) {
    throw noon::InvalidArgumentError("fisher requires at least 2 grid points");
  }
  if (!(phi_max > options.phi_min)) {
    throw noon::InvalidArgumentError("fisher requires phi-max > phi-min");
  }

  report.config = {
      {"n", Cell::integer(n)},
      {"delta", Cell::number(options.delta)},
      {"phi-min", Cell::number(options.phi_min)},
      {"phi-max", Cell::number(phi_max)},
      {"points", Cell::integer(options.points)},
      {"step", Cell::number(options.step)},
  };

  const auto probabilities = [&](double phi) {
    const auto [p_plus, p_minus] =
        noon::analytic_probabilities(n, options.delta, phi);
    return std::vector<double>{p_plus, p_minus};
  };

  bool skipped_stationary = false;
  Table table;
  table.header = {"phi",
                  "fisher_rederived",
                  "fisher_cos_denominator",
                  "fisher_numeric",
                  "fisher_numeric_error",
                  "variant_rel_difference"};
  for (int j = 0; j < options.points; ++j) {
    const double phi =
        options.phi_min + (phi_max - options.phi_min) *
                              static_cast<double>(j) /
                              static_cast<double>(options.points - 1);
    std::vector<Cell> row(6, Cell::empty());
    row[0] = Cell::number(phi);
    double rederived = 0.0;
    bool have_rederived = false;
    try {
      rederived = noon::fisher_information_analytic(
          n, options.delta, phi, noon::FisherVariant::rederived);
      row[1] = Cell::number(rederived);
      have_rederived = true;
    } catch (const noon::InvalidArgumentError&) {
      skipped_stationary = true;
    }
    try {
      const double alternate = noon::fisher_information_analytic(
          n, options.delta, phi, noon::FisherVariant::cos_denominator);
      row[2] = Cell::number(alternate);
      if (have_rederived && rederived > 0.0) {
        row[5] = Cell::number(std::abs(alternate - rederived) / rederived);
      }
    } catch (const noon::InvalidArgumentError&) {
      skipped_stationary = true;
    }
    const noon::NumericFisher numeric =
        noon::fisher_information_numeric(probabilities, phi, options.step);
    row[3] = Cell::number(numeric.value);
    row[4] = Cell::number(numeric.error_estimate);
    table.rows.push_back(std::move(row));
  }
  report.table = std::move(table);

  report.warnings.push_back(kFisherVariantWarning);
  if (skipped_stationary) {
    report.warnings.push_back(
        {"stationary-point",
         "closed forms are undefined where the denominator vanishes "
         "(delta = 0 at a stationary phase); those cells are left empty"});
  }
  return report;
}

}  // namespace noonsim
