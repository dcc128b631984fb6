#pragma once

// Gaussian-noise preparation of noon states.
//
// The N-factor product prod_k (a_dag + e^{i phi_k} b_dag)|0> yields a noon
// state when the phi_k hit the N-th-roots-of-unity targets exactly. Under
// phase-control noise each phi_k is Normal(target_k, delta), delta being the
// VARIANCE in rad^2 and sqrt(delta) the standard deviation. The averaged
// state is produced three ways: per-sample pure states, Monte Carlo
// integration, and the exact closed form via Gaussian characteristic
// functions E[e^{i s phi_k}] = exp(i s mu_k - s^2 delta / 2).

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "noon/fock.hpp"

namespace noon {

struct NoiseModel {
  int photon_number;                  // N >= 1: photon count and factor count
  double delta;                       // phase variance, rad^2, >= 0
  std::vector<double> target_phases;  // length N; entry k-1 is the mean of phi_k

  // Default targets 2*pi*k/N for k = 1..N.
  NoiseModel(int photon_number, double delta);
  NoiseModel(int photon_number, double delta, std::vector<double> targets);

  // Sum of the targets mod 2*pi: the branch phase of the noiseless product,
  // used to align the measurement basis.
  double target_phase_sum() const;
};

struct PhaseSample {
  std::vector<double> phases;
  // Counter pair that produced the sample, for reproducibility.
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

// Phases drawn i.i.d. from Normal(target_k, delta) on stream (seed, index).
PhaseSample draw_phase_sample(const NoiseModel& model, std::uint64_t seed,
                              std::uint64_t index);

// Normalized product state for one phase realization. Renormalizes after
// every factor so amplitudes stay O(1) at any N; no factorial is ever formed.
PureState prepare_pure(const NoiseModel& model, const PhaseSample& sample);
PureState prepare_pure(const NoiseModel& model,
                       const std::vector<double>& phases);

struct ExactMixed {
  DensityMatrix half_factorial;  // raw average / (2 N!)
  DensityMatrix trace_one;
  double trace;  // trace of the half_factorial matrix; >= 1, = 1 iff noiseless
};

inline constexpr int kDefaultExactPhotonCap = 20;

// Exact noise average. The factor product is expanded with a dynamic program
// over (photons in b on the ket side, on the bra side), one factor at a time;
// independence across k reduces the subset-pair sum to O(N^3) work. Photon
// numbers above `photon_cap` raise CapacityError.
ExactMixed prepare_mixed_exact(const NoiseModel& model,
                               int photon_cap = kDefaultExactPhotonCap);

struct McMixed {
  DensityMatrix trace_one;
  DensityMatrix half_factorial;  // unbiased estimate of the exact average
  // Per-entry standard errors of the half_factorial estimate.
  Eigen::MatrixXd se_real;
  Eigen::MatrixXd se_imag;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo integration of the noise average. Sample i contributes its raw
// outer product (weight ||psi_raw||^2 / (2 N!) times the normalized outer
// product), which makes the estimate unbiased for the exact average entry by
// entry; an equal-weight mixture of normalized states would be biased for
// N >= 2 because the raw norm varies with the phases. Deterministic for fixed
// (seed, samples) at any thread count: per-sample counter streams plus a
// fixed-shape block reduction.
McMixed prepare_mixed_mc(const NoiseModel& model, std::size_t samples,
                         std::uint64_t seed, int threads = 1);

// <N,0|rho|N,0> + <0,N|rho|0,N> for a trace_one density matrix: the weight
// the state keeps inside the noon subspace.
double noon_weight(const DensityMatrix& rho);

}  // namespace noon
