#include "noon/estimation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "noon/metrology.hpp"
#include "noon/parallel.hpp"
#include "noon/rng.hpp"

namespace noon {

namespace {

double log_likelihood(const ShotRecord& record, double phi) {
  const auto [p_plus, p_minus] =
      analytic_probabilities(record.photon_number, record.delta, phi);
  double ll = 0.0;
  if (record.n_plus > 0) {
    if (p_plus <= 0.0) return -std::numeric_limits<double>::infinity();
    ll += static_cast<double>(record.n_plus) * std::log(p_plus);
  }
  if (record.n_minus > 0) {
    if (p_minus <= 0.0) return -std::numeric_limits<double>::infinity();
    ll += static_cast<double>(record.n_minus) * std::log(p_minus);
  }
  return ll;
}

// Golden-section maximization; the probe sequence is a pure function of the
// interval, so results are reproducible.
double maximize_on_interval(const ShotRecord& record, double lo, double hi) {
  constexpr double kInvGolden = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - kInvGolden * (b - a);
  double x2 = a + kInvGolden * (b - a);
  double f1 = log_likelihood(record, x1);
  double f2 = log_likelihood(record, x2);
  for (int iter = 0; iter < 200 && (b - a) > 1e-15 * (1.0 + hi - lo); ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvGolden * (b - a);
      f2 = log_likelihood(record, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvGolden * (b - a);
      f1 = log_likelihood(record, x1);
    }
  }
  const double mid = 0.5 * (a + b);
  // Boundaries can strictly dominate the interior (all-plus or all-minus
  // counts); keep whichever of {lo, mid, hi} wins.
  double best = mid;
  double best_ll = log_likelihood(record, mid);
  for (double candidate : {lo, hi}) {
    const double ll = log_likelihood(record, candidate);
    if (ll > best_ll) {
      best = candidate;
      best_ll = ll;
    }
  }
  return best;
}

}  // namespace

std::int64_t draw_binomial(double p, std::int64_t shots, std::uint64_t seed,
                           std::uint64_t stream) {
  if (shots < 1) {
    throw InvalidArgumentError("draw_binomial requires shots >= 1");
  }
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw InvalidArgumentError("draw_binomial requires p in [0, 1]");
  }
  rng::Stream rng_stream(seed, stream);
  std::int64_t successes = 0;
  for (std::int64_t i = 0; i < shots; ++i) {
    if (rng_stream.next_bernoulli(p)) ++successes;
  }
  return successes;
}

ShotRecord simulate_shots(int photon_number, double delta, double phi_true,
                          std::int64_t shots, std::uint64_t seed,
                          std::uint64_t stream) {
  const auto [p_plus, p_minus] =
      analytic_probabilities(photon_number, delta, phi_true);
  (void)p_minus;
  const std::int64_t plus = draw_binomial(p_plus, shots, seed, stream);
  ShotRecord record;
  record.n_plus = plus;
  record.n_minus = shots - plus;
  record.photon_number = photon_number;
  record.delta = delta;
  record.phi_true = phi_true;
  record.seed = seed;
  record.stream = stream;
  return record;
}

double mle_phase(const ShotRecord& record) {
  const double branch = std::numbers::pi / record.photon_number;
  return mle_phase(record, {0.0, branch});
}

double mle_phase(const ShotRecord& record,
                 std::pair<double, double> search_interval) {
  if (record.shots() < 1) {
    throw InvalidArgumentError("mle_phase: empty counts");
  }
  const auto [lo, hi] = search_interval;
  if (!(hi > lo)) {
    throw InvalidArgumentError("mle_phase: degenerate search interval");
  }
  const double fraction =
      static_cast<double>(record.n_plus) / static_cast<double>(record.shots());
  const double argument = (2.0 * fraction - 1.0) *
                          std::exp(0.5 * record.photon_number * record.delta);
  if (std::abs(argument) <= 1.0) {
    const double candidate = std::acos(argument) / record.photon_number;
    if (candidate >= lo && candidate <= hi) return candidate;
  }
  return maximize_on_interval(record, lo, hi);
}

EstimationSummary verify_crb(int photon_number, double delta, double phi_true,
                             std::int64_t shots, int trials,
                             std::uint64_t seed, int threads) {
  if (trials < 2) {
    throw InvalidArgumentError("verify_crb requires trials >= 2");
  }
  std::vector<double> estimates(static_cast<std::size_t>(trials));
  for_each_index(static_cast<std::size_t>(trials), threads,
                 [&](std::size_t t) {
                   const ShotRecord record = simulate_shots(
                       photon_number, delta, phi_true, shots, seed, t);
                   estimates[t] = mle_phase(record);
                 });

  const double mean =
      pairwise_sum(estimates) / static_cast<double>(trials);
  std::vector<double> squared(estimates.size());
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    const double dev = estimates[i] - mean;
    squared[i] = dev * dev;
  }
  const double variance =
      pairwise_sum(squared) / static_cast<double>(trials - 1);

  const double fisher =
      fisher_information_analytic(photon_number, delta, phi_true);
  const double crb =
      1.0 / std::sqrt(static_cast<double>(shots) * fisher);

  EstimationSummary summary;
  summary.phi_hat_mean = mean;
  summary.empirical_std = std::sqrt(variance);
  summary.crb_std = crb;
  summary.ratio = summary.empirical_std / crb;
  summary.trials = trials;
  summary.shots_per_trial = shots;
  summary.photon_number = photon_number;
  summary.delta = delta;
  summary.phi_true = phi_true;
  summary.seed = seed;
  return summary;
}

}  // namespace noon
