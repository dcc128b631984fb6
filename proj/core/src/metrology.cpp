#include "noon/metrology.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace noon {

namespace {

constexpr double kPi = std::numbers::pi;

void require_photons_positive(int n, const char* what) {
  if (n < 1) {
    throw InvalidArgumentError(std::string(what) + " requires N >= 1");
  }
}

}  // namespace

MeasurementModel::MeasurementModel(int photon_number, double branch_phase,
                                   RestPolicy policy)
    : photon_number_(photon_number),
      branch_phase_(branch_phase),
      rest_policy_(policy) {
  require_photons_positive(photon_number, "MeasurementModel");
}

MeasurementModel MeasurementModel::standard(int photon_number,
                                            RestPolicy policy) {
  return MeasurementModel(photon_number, 0.0, policy);
}

MeasurementModel MeasurementModel::aligned_with(const NoiseModel& model,
                                                RestPolicy policy) {
  return MeasurementModel(model.photon_number, model.target_phase_sum(),
                          policy);
}

Eigen::MatrixXcd MeasurementModel::e_plus() const {
  const int dim = photon_number_ + 1;
  Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(dim);
  ket(0) = 1.0 / std::sqrt(2.0);
  ket(photon_number_) = std::polar(1.0 / std::sqrt(2.0), branch_phase_);
  return ket * ket.adjoint();
}

Eigen::MatrixXcd MeasurementModel::e_minus() const {
  const int dim = photon_number_ + 1;
  Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(dim);
  ket(0) = 1.0 / std::sqrt(2.0);
  ket(photon_number_) = -std::polar(1.0 / std::sqrt(2.0), branch_phase_);
  return ket * ket.adjoint();
}

DensityMatrix apply_phase_shift(const DensityMatrix& rho, double phi) {
  const int dim = rho.dim();
  Eigen::MatrixXcd out(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int mp = 0; mp < dim; ++mp) {
      out(m, mp) =
          rho.matrix()(m, mp) * std::polar(1.0, (m - mp) * phi);
    }
  }
  return DensityMatrix(std::move(out), rho.normalization());
}

PureState apply_phase_shift(const PureState& state, double phi) {
  Eigen::VectorXcd amps = state.amplitudes();
  for (int m = 0; m < amps.size(); ++m) {
    amps(m) *= std::polar(1.0, m * phi);
  }
  return PureState(state.total_photons(), std::move(amps));
}

OutcomeProbabilities outcome_probabilities(const DensityMatrix& rho,
                                           double phi,
                                           const MeasurementModel& model) {
  const int n = model.photon_number();
  if (rho.total_photons() != n) {
    throw DimensionError("outcome_probabilities: photon number mismatch");
  }
  // Only the span{|N,0>, |0,N>} block enters tr[E_j rho(phi)].
  const auto& m = rho.matrix();
  const double pop = 0.5 * (m(0, 0).real() + m(n, n).real());
  const Complex shifted = m(0, n) * std::polar(1.0, -n * phi);
  const double interference =
      (std::polar(1.0, model.branch_phase()) * shifted).real();
  const double raw_plus = pop + interference;
  const double raw_minus = pop - interference;

  OutcomeProbabilities probs;
  if (model.rest_policy() == RestPolicy::aggregate_rest) {
    if (rho.normalization() != DensityMatrix::Norm::trace_one) {
      throw InvalidArgumentError(
          "aggregate_rest requires a trace_one density matrix");
    }
    probs.p_plus = raw_plus;
    probs.p_minus = raw_minus;
    probs.p_rest = 1.0 - raw_plus - raw_minus;
  } else {
    const double subspace = raw_plus + raw_minus;
    if (!(subspace > std::numeric_limits<double>::min())) {
      throw DegenerateSubspaceError(
          "conditioning requested but the noon-subspace weight vanishes");
    }
    probs.p_plus = raw_plus / subspace;
    probs.p_minus = raw_minus / subspace;
  }
  return probs;
}

std::pair<double, double> analytic_probabilities(int photon_number,
                                                 double delta, double phi) {
  require_photons_positive(photon_number, "analytic_probabilities");
  if (!(delta >= 0.0)) {
    throw InvalidArgumentError("analytic_probabilities requires delta >= 0");
  }
  const double visibility = std::exp(-0.5 * photon_number * delta);
  const double interference =
      0.5 * std::cos(photon_number * phi) * visibility;
  return {0.5 + interference, 0.5 - interference};
}

double fisher_information_analytic(int photon_number, double delta, double phi,
                                   FisherVariant variant) {
  require_photons_positive(photon_number, "fisher_information_analytic");
  const double n = static_cast<double>(photon_number);
  const double s = std::sin(n * phi);
  // e^{N delta} - cos^2 = expm1(N delta) + sin^2 keeps the delta -> 0 limit
  // exact; likewise e^{N delta} - cos = expm1(N delta) + 2 sin^2(N phi / 2).
  double denominator;
  if (variant == FisherVariant::rederived) {
    denominator = std::expm1(n * delta) + s * s;
  } else {
    const double half = std::sin(0.5 * n * phi);
    denominator = std::expm1(n * delta) + 2.0 * half * half;
  }
  if (!(denominator > 0.0)) {
    throw InvalidArgumentError(
        "fisher_information_analytic: denominator vanishes (delta = 0 at a "
        "stationary point)");
  }
  return n * n * s * s / denominator;
}

NumericFisher fisher_information_numeric(
    const std::function<std::vector<double>(double)>& probabilities,
    double phi, double step) {
  if (!(step > 0.0)) {
    throw InvalidArgumentError("fisher_information_numeric: step must be > 0");
  }
  const std::vector<double> at_phi = probabilities(phi);
  if (at_phi.empty()) {
    throw InvalidArgumentError(
        "fisher_information_numeric: no outcome probabilities");
  }

  const auto central = [&](double h) {
    const std::vector<double> hi = probabilities(phi + h);
    const std::vector<double> lo = probabilities(phi - h);
    if (hi.size() != at_phi.size() || lo.size() != at_phi.size()) {
      throw InvalidArgumentError(
          "fisher_information_numeric: outcome count varies with phi");
    }
    std::vector<double> d(at_phi.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
      d[j] = (hi[j] - lo[j]) / (2.0 * h);
    }
    return d;
  };

  // Richardson ladder: D(h), D(h/2), D(h/4) -> two fourth/sixth order
  // extrapolants; the difference of the last two is the error estimate.
  const std::vector<double> d1 = central(step);
  const std::vector<double> d2 = central(0.5 * step);
  const std::vector<double> d4 = central(0.25 * step);

  const auto fisher_from = [&](const std::vector<double>& derivative) {
    double total = 0.0;
    for (std::size_t j = 0; j < at_phi.size(); ++j) {
      const double p = at_phi[j];
      const double dp = derivative[j];
      if (!std::isfinite(p) || !std::isfinite(dp)) {
        throw InvalidArgumentError(
            "fisher_information_numeric: non-finite probabilities");
      }
      if (p <= 0.0) {
        if (std::abs(dp) <= 1e-8) continue;  // 0'/0 convention
        throw SingularOutcomeError(
            "outcome probability is 0 with nonzero slope at phi");
      }
      total += dp * dp / p;
    }
    return total;
  };

  std::vector<double> r1(at_phi.size());
  std::vector<double> r2(at_phi.size());
  std::vector<double> r3(at_phi.size());
  for (std::size_t j = 0; j < at_phi.size(); ++j) {
    r1[j] = (4.0 * d2[j] - d1[j]) / 3.0;
    r2[j] = (4.0 * d4[j] - d2[j]) / 3.0;
    r3[j] = (16.0 * r2[j] - r1[j]) / 15.0;
  }
  const double refined = fisher_from(r3);
  const double coarse = fisher_from(r2);
  return NumericFisher{refined, std::abs(refined - coarse)};
}

double cramer_rao_delta_phi(double fisher_information) {
  if (!(fisher_information > 0.0)) {
    throw InvalidArgumentError("cramer_rao_delta_phi requires F > 0");
  }
  return 1.0 / std::sqrt(fisher_information);
}

double min_uncertainty(int photon_number, double delta) {
  require_photons_positive(photon_number, "min_uncertainty");
  if (!(delta >= 0.0)) {
    throw InvalidArgumentError("min_uncertainty requires delta >= 0");
  }
  const double n = static_cast<double>(photon_number);
  return std::exp(0.5 * n * delta) / n;
}

std::int64_t optimal_photon_number(double delta) {
  if (!(delta > 0.0)) {
    throw UnboundedOptimumError(
        "delta = 0 has no finite optimum: the bound decreases as 1/N");
  }
  const double continuum = 2.0 / delta;
  if (continuum > 4.0e18) {
    throw CapacityError(
        "optimal photon number exceeds the integer range for delta = " +
        std::to_string(delta));
  }
  const std::int64_t lo =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(continuum)));
  const std::int64_t hi =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(continuum)));
  if (lo == hi) return lo;
  const auto bound_at = [delta](std::int64_t n) {
    const double real_n = static_cast<double>(n);
    return std::exp(0.5 * real_n * delta) / real_n;
  };
  return bound_at(lo) <= bound_at(hi) ? lo : hi;  // ties prefer the cheaper state
}

std::vector<SensitivityReport> sensitivity_curve(double delta, int n_min,
                                                 int n_max) {
  if (n_min < 1 || n_max < n_min) {
    throw InvalidArgumentError("sensitivity_curve requires 1 <= n_min <= n_max");
  }
  std::vector<SensitivityReport> curve;
  curve.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    SensitivityReport report;
    report.photon_number = n;
    report.delta = delta;
    report.phi = kPi / (2.0 * n);
    const auto [p_plus, p_minus] = analytic_probabilities(n, delta, report.phi);
    report.p_plus = p_plus;
    report.p_minus = p_minus;
    report.fisher_information =
        fisher_information_analytic(n, delta, report.phi);
    report.delta_phi_bound = min_uncertainty(n, delta);
    report.shot_noise_limit = 1.0 / std::sqrt(static_cast<double>(n));
    report.heisenberg_limit = 1.0 / static_cast<double>(n);
    curve.push_back(report);
  }
  return curve;
}

std::size_t argmin_delta_phi(const std::vector<SensitivityReport>& curve) {
  if (curve.empty()) {
    throw InvalidArgumentError("argmin_delta_phi: empty curve");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].delta_phi_bound < curve[best].delta_phi_bound) best = i;
  }
  return best;
}

double lithographic_resolution(double wavelength, int photon_number) {
  require_photons_positive(photon_number, "lithographic_resolution");
  if (!(wavelength > 0.0)) {
    throw InvalidArgumentError("lithographic_resolution requires wavelength > 0");
  }
  return wavelength / (4.0 * photon_number);
}

}  // namespace noon
