#pragma once

// Monte Carlo measurement harness: simulate repeated two-outcome detections
// on noisy noon states at a true phase, estimate the phase by maximum
// likelihood, and compare the empirical spread against the Cramer-Rao bound.

#include <cstdint>
#include <utility>

#include "noon/errors.hpp"

namespace noon {

struct ShotRecord {
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;
  int photon_number = 0;
  double delta = 0.0;
  double phi_true = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;  // trial index within the seed

  std::int64_t shots() const { return n_plus + n_minus; }
};

// Sampling core: number of successes among `shots` Bernoulli draws at
// probability p. Stream (seed, stream) fixes the draw exactly. Callers may
// feed any probability source (e.g. exact-state outcome probabilities).
std::int64_t draw_binomial(double p, std::int64_t shots, std::uint64_t seed,
                           std::uint64_t stream);

// Draws `shots` outcomes with p_plus from the conditioned two-outcome model.
ShotRecord simulate_shots(int photon_number, double delta, double phi_true,
                          std::int64_t shots, std::uint64_t seed,
                          std::uint64_t stream = 0);

// Maximum-likelihood phase on one monotone branch of cos(N phi). The default
// interval (0, pi/N) avoids the N phi periodicity ambiguity. Closed form:
// phi_hat = arccos((2 n_plus / shots - 1) e^{N delta / 2}) / N; when that
// argument falls outside [-1, 1] (finite-sample noise amplified by the
// visibility correction) the likelihood is maximized numerically on the
// interval instead.
double mle_phase(const ShotRecord& record);
double mle_phase(const ShotRecord& record,
                 std::pair<double, double> search_interval);

struct EstimationSummary {
  double phi_hat_mean = 0.0;
  double empirical_std = 0.0;
  double crb_std = 0.0;   // 1 / sqrt(shots * F(phi_true))
  double ratio = 0.0;     // empirical_std / crb_std
  int trials = 0;
  std::int64_t shots_per_trial = 0;
  int photon_number = 0;
  double delta = 0.0;
  double phi_true = 0.0;
  std::uint64_t seed = 0;
};

// Runs `trials` independent experiments of `shots` detections each (trial t
// uses stream (seed, t)) and compares the empirical standard deviation of
// phi_hat with the Cramer-Rao bound. Deterministic at any thread count.
EstimationSummary verify_crb(int photon_number, double delta, double phi_true,
                             std::int64_t shots, int trials,
                             std::uint64_t seed, int threads = 1);

}  // namespace noon
