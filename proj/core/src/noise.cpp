#include "noon/noise.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "noon/parallel.hpp"
#include "noon/rng.hpp"

namespace noon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> default_targets(int n) {
  std::vector<double> targets(n);
  for (int k = 1; k <= n; ++k) {
    targets[k - 1] = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
  }
  return targets;
}

void validate_model(const NoiseModel& model) {
  if (model.photon_number < 1) {
    throw InvalidArgumentError("NoiseModel requires photon_number >= 1");
  }
  if (!(model.delta >= 0.0)) {
    throw InvalidArgumentError("NoiseModel requires delta >= 0");
  }
  if (model.target_phases.size() !=
      static_cast<std::size_t>(model.photon_number)) {
    throw DimensionError("NoiseModel: target_phases must have length N");
  }
}

// State plus the log of the raw squared norm accumulated across factors.
struct TrackedState {
  PureState state;
  double log_squared_norm;
};

TrackedState prepare_tracked(const NoiseModel& model,
                             const std::vector<double>& phases) {
  if (phases.size() != static_cast<std::size_t>(model.photon_number)) {
    throw DimensionError("phase sample length must equal photon_number");
  }
  PureState state = PureState::vacuum();
  double log_sq = 0.0;
  for (double phase : phases) {
    Normalized next = normalize(apply_creation_factor(state, phase));
    log_sq += std::log(next.squared_norm_before);
    state = std::move(next.state);
  }
  return TrackedState{std::move(state), log_sq};
}

double log_half_factorial(int n) {
  return std::log(2.0) + std::lgamma(static_cast<double>(n) + 1.0);
}

}  // namespace

NoiseModel::NoiseModel(int photon_number_, double delta_)
    : photon_number(photon_number_),
      delta(delta_),
      target_phases(default_targets(photon_number_)) {
  validate_model(*this);
}

NoiseModel::NoiseModel(int photon_number_, double delta_,
                       std::vector<double> targets)
    : photon_number(photon_number_),
      delta(delta_),
      target_phases(std::move(targets)) {
  validate_model(*this);
}

double NoiseModel::target_phase_sum() const {
  double sum = 0.0;
  for (double t : target_phases) sum += t;
  return std::remainder(sum, kTwoPi);
}

PhaseSample draw_phase_sample(const NoiseModel& model, std::uint64_t seed,
                              std::uint64_t index) {
  validate_model(model);
  rng::Stream stream(seed, index);
  const double sigma = std::sqrt(model.delta);
  PhaseSample sample;
  sample.seed = seed;
  sample.index = index;
  sample.phases.resize(model.target_phases.size());
  for (std::size_t k = 0; k < sample.phases.size(); ++k) {
    sample.phases[k] = model.target_phases[k] + sigma * stream.next_normal();
  }
  return sample;
}

PureState prepare_pure(const NoiseModel& model, const PhaseSample& sample) {
  return prepare_pure(model, sample.phases);
}

PureState prepare_pure(const NoiseModel& model,
                       const std::vector<double>& phases) {
  validate_model(model);
  return prepare_tracked(model, phases).state;
}

ExactMixed prepare_mixed_exact(const NoiseModel& model, int photon_cap) {
  validate_model(model);
  const int n = model.photon_number;
  if (n > photon_cap) {
    throw CapacityError("prepare_mixed_exact: N = " + std::to_string(n) +
                        " exceeds the configured cap " +
                        std::to_string(photon_cap));
  }

  // Coefficient DP: C(m, m') collects the sum over (ket subset of size m,
  // bra subset of size m') of the averaged phase factors. Factor k offers
  //   1                        (b_dag on neither side)
  //   x * E[e^{+i phi_k}]      (ket side only)
  //   y * E[e^{-i phi_k}]      (bra side only)
  //   x * y                    (both sides; the phase cancels exactly)
  // with E[e^{+-i phi_k}] = e^{+-i mu_k} e^{-delta/2}.
  const double damp = std::exp(-0.5 * model.delta);
  Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  coeff(0, 0) = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex ket_term = damp * std::polar(1.0, model.target_phases[k]);
    const Complex bra_term = std::conj(ket_term);
    for (int m = n; m >= 0; --m) {
      for (int mp = n; mp >= 0; --mp) {
        Complex acc = coeff(m, mp);
        if (m > 0) acc += ket_term * coeff(m - 1, mp);
        if (mp > 0) acc += bra_term * coeff(m, mp - 1);
        if (m > 0 && mp > 0) acc += coeff(m - 1, mp - 1);
        coeff(m, mp) = acc;
      }
    }
  }

  // Entry scale sqrt(m!(N-m)! m'!(N-m')!) / (2 N!), via lgamma so the
  // extreme entries come out exactly 0.5 * coefficient.
  std::vector<double> log_weight(n + 1);
  const double lg_n = std::lgamma(static_cast<double>(n) + 1.0);
  for (int m = 0; m <= n; ++m) {
    log_weight[m] = std::lgamma(static_cast<double>(m) + 1.0) +
                    std::lgamma(static_cast<double>(n - m) + 1.0);
  }
  Eigen::MatrixXcd half_fact(n + 1, n + 1);
  for (int m = 0; m <= n; ++m) {
    for (int mp = 0; mp <= n; ++mp) {
      const double scale =
          0.5 * std::exp(0.5 * (log_weight[m] + log_weight[mp]) - lg_n);
      half_fact(m, mp) = scale * coeff(m, mp);
    }
  }

  DensityMatrix rho_half(std::move(half_fact),
                         DensityMatrix::Norm::half_factorial);
  const double trace = rho_half.trace_real();
  DensityMatrix rho_one = rho_half.with_trace_one();
  return ExactMixed{std::move(rho_half), std::move(rho_one), trace};
}

McMixed prepare_mixed_mc(const NoiseModel& model, std::size_t samples,
                         std::uint64_t seed, int threads) {
  validate_model(model);
  if (samples < 1) {
    throw InvalidArgumentError("prepare_mixed_mc requires samples >= 1");
  }
  const int dim = model.photon_number + 1;
  const double log_scale = log_half_factorial(model.photon_number);

  struct BlockSums {
    Eigen::MatrixXcd sum;
    Eigen::MatrixXd sum_sq_real;
    Eigen::MatrixXd sum_sq_imag;
  };

  const std::size_t num_blocks =
      (samples + kMonteCarloBlock - 1) / kMonteCarloBlock;
  std::vector<BlockSums> blocks(num_blocks);

  for_each_index(num_blocks, threads, [&](std::size_t b) {
    BlockSums acc{Eigen::MatrixXcd::Zero(dim, dim),
                  Eigen::MatrixXd::Zero(dim, dim),
                  Eigen::MatrixXd::Zero(dim, dim)};
    const std::size_t begin = b * kMonteCarloBlock;
    const std::size_t end = std::min(begin + kMonteCarloBlock, samples);
    for (std::size_t i = begin; i < end; ++i) {
      const PhaseSample sample = draw_phase_sample(model, seed, i);
      const TrackedState prepared = prepare_tracked(model, sample.phases);
      const double weight = std::exp(prepared.log_squared_norm - log_scale);
      const Eigen::MatrixXcd term =
          weight * (prepared.state.amplitudes() *
                    prepared.state.amplitudes().adjoint());
      acc.sum += term;
      acc.sum_sq_real += term.real().cwiseAbs2();
      acc.sum_sq_imag += term.imag().cwiseAbs2();
    }
    blocks[b] = std::move(acc);
  });

  BlockSums total = pairwise_combine(std::move(blocks),
                                     [](BlockSums& lhs, const BlockSums& rhs) {
                                       lhs.sum += rhs.sum;
                                       lhs.sum_sq_real += rhs.sum_sq_real;
                                       lhs.sum_sq_imag += rhs.sum_sq_imag;
                                     });

  const double count = static_cast<double>(samples);
  Eigen::MatrixXcd mean = total.sum / count;

  Eigen::MatrixXd se_real = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd se_imag = Eigen::MatrixXd::Zero(dim, dim);
  if (samples >= 2) {
    const auto se_of_mean = [count](double sum_sq, double mean_value) {
      const double variance =
          std::max(0.0, (sum_sq / count - mean_value * mean_value) * count /
                            (count - 1.0));
      return std::sqrt(variance / count);
    };
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        se_real(r, c) = se_of_mean(total.sum_sq_real(r, c), mean(r, c).real());
        se_imag(r, c) = se_of_mean(total.sum_sq_imag(r, c), mean(r, c).imag());
      }
    }
  }

  DensityMatrix rho_half(std::move(mean), DensityMatrix::Norm::half_factorial);
  DensityMatrix rho_one = rho_half.with_trace_one();
  return McMixed{std::move(rho_one), std::move(rho_half), std::move(se_real),
                 std::move(se_imag),  samples,             seed};
}

double noon_weight(const DensityMatrix& rho) {
  if (rho.normalization() != DensityMatrix::Norm::trace_one) {
    throw InvalidArgumentError("noon_weight requires a trace_one input");
  }
  const int n = rho.total_photons();
  return rho.matrix()(0, 0).real() + rho.matrix()(n, n).real();
}

}  // namespace noon
