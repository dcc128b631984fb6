#pragma once

// Phase measurement and estimation theory: the two-outcome projective
// measurement on span{|N,0>, |0,N>}, phase evolution, outcome probabilities,
// Fisher information (closed form and numeric), Cramer-Rao bounds, and the
// sensitivity-versus-N analysis.

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "noon/fock.hpp"
#include "noon/noise.hpp"

namespace noon {

// Policy for the population outside span{|N,0>, |0,N>}. The noisy state has
// weight there, which the two projectors cannot see.
enum class RestPolicy {
  aggregate_rest,              // report p_rest = 1 - p_plus - p_minus
  condition_on_noon_subspace,  // renormalize within the subspace (default)
};

// Projective measurement E+- = |e+-><e+-| with
// |e+-> = (|N,0> +- e^{i branch_phase}|0,N>)/sqrt(2).
// branch_phase = 0 is the textbook pair; aligned_with() matches the branch
// phase the factorized preparation actually produces (sum of the target
// phases), so the noiseless state registers as the "+" outcome for every N.
class MeasurementModel {
 public:
  static MeasurementModel standard(
      int photon_number,
      RestPolicy policy = RestPolicy::condition_on_noon_subspace);
  static MeasurementModel aligned_with(
      const NoiseModel& model,
      RestPolicy policy = RestPolicy::condition_on_noon_subspace);

  int photon_number() const { return photon_number_; }
  double branch_phase() const { return branch_phase_; }
  RestPolicy rest_policy() const { return rest_policy_; }

  Eigen::MatrixXcd e_plus() const;
  Eigen::MatrixXcd e_minus() const;

 private:
  MeasurementModel(int photon_number, double branch_phase, RestPolicy policy);

  int photon_number_;
  double branch_phase_;
  RestPolicy rest_policy_;
};

// Conjugation by e^{i n_b phi}: entry (m, m') picks up e^{i (m - m') phi}.
// Trace, eigenvalues and diagonal are preserved.
DensityMatrix apply_phase_shift(const DensityMatrix& rho, double phi);
PureState apply_phase_shift(const PureState& state, double phi);

struct OutcomeProbabilities {
  double p_plus = 0.0;
  double p_minus = 0.0;
  std::optional<double> p_rest;  // present under aggregate_rest
};

// p(j|phi) = tr[E_j rho(phi)]. aggregate_rest requires a trace_one input;
// conditioning accepts any normalization (the subspace ratio removes it) and
// throws DegenerateSubspaceError when the subspace weight vanishes.
OutcomeProbabilities outcome_probabilities(const DensityMatrix& rho,
                                           double phi,
                                           const MeasurementModel& model);

// Closed-form conditioned probabilities of the Gaussian-noise model:
// p(+-|phi) = 1/2 +- (1/2) cos(N phi) e^{-N delta / 2}.
std::pair<double, double> analytic_probabilities(int photon_number,
                                                 double delta, double phi);

// Two closed forms for the Fisher information of the two-outcome model.
enum class FisherVariant {
  rederived,        // N^2 sin^2(N phi) / (e^{N delta} - cos^2(N phi));
                    // follows from differentiating the probabilities (default)
  cos_denominator,  // N^2 sin^2(N phi) / (e^{N delta} - cos(N phi));
                    // commonly quoted variant, equal at phi = pi/2N
};

double fisher_information_analytic(int photon_number, double delta, double phi,
                                   FisherVariant variant =
                                       FisherVariant::rederived);

struct NumericFisher {
  double value = 0.0;
  double error_estimate = 0.0;  // step-halving residual
};

// F(phi) = sum_j (d p_j / d phi)^2 / p_j by central differences with two
// Richardson levels. Outcomes with p = 0 and zero slope contribute 0 by
// convention; p = 0 with nonzero slope throws SingularOutcomeError.
NumericFisher fisher_information_numeric(
    const std::function<std::vector<double>(double)>& probabilities,
    double phi, double step = 1e-4);

// Cramer-Rao: delta_phi >= 1 / sqrt(F).
double cramer_rao_delta_phi(double fisher_information);

// Phase uncertainty at the operating point phi = pi/2N: e^{N delta / 2} / N.
double min_uncertainty(int photon_number, double delta);

// Integer N minimizing min_uncertainty; the real-valued optimum is 2/delta.
// Ties between floor and ceil go to the smaller N. delta = 0 throws
// UnboundedOptimumError (the bound is monotone 1/N).
std::int64_t optimal_photon_number(double delta);

struct SensitivityReport {
  int photon_number = 0;
  double delta = 0.0;
  double phi = 0.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double fisher_information = 0.0;
  double delta_phi_bound = 0.0;
  double shot_noise_limit = 0.0;  // 1/sqrt(N)
  double heisenberg_limit = 0.0;  // 1/N
  FisherVariant variant = FisherVariant::rederived;
  RestPolicy policy = RestPolicy::condition_on_noon_subspace;
};

// Closed-form sensitivity at the operating point phi = pi/2N for each N in
// [n_min, n_max].
std::vector<SensitivityReport> sensitivity_curve(double delta, int n_min,
                                                 int n_max);

// Index of the row with the smallest delta_phi_bound (first on ties).
std::size_t argmin_delta_phi(const std::vector<SensitivityReport>& curve);

// Minimum resolvable feature size lambda / (4 N).
double lithographic_resolution(double wavelength, int photon_number);

}  // namespace noon
