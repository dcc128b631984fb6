#pragma once

// Bootstrapped phase-calibration planner.
//
// A noisy noon state built at phase variance delta measures phase to
// delta_phi_min = e * delta / 2 (the bound at the optimal photon number
// N = 2/delta). Re-calibrating the phase shifters with that measurement
// gives the next variance delta' = (e * delta / 2)^2, which improves on
// delta exactly when sqrt(delta) < 2/e. Iterating drives delta to zero
// super-exponentially: with w_n = (e/2)^2 * delta_n, the recursion is
// w_{n+1} = w_n^2, i.e. delta_n = (2/e)^2 * ((e/2)^2 * delta_0)^(2^n).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noon/errors.hpp"

namespace noon {

// Feasibility threshold on sqrt(delta): strict inequality, the boundary is
// the fixed point of the recursion and yields no improvement.
double bootstrap_threshold_sqrt_delta();  // 2/e

// True iff sqrt(delta) < 2/e (delta > 0 required).
bool can_bootstrap(double delta);

// One recursion step: (e * delta / 2)^2.
double next_delta(double delta);

// Closed-form solution of the recursion, symbolically verified:
// delta_n = (2/e)^2 * ((e/2)^2 * delta_0)^(2^n).
double closed_form_delta(double delta0, int n);

struct BootstrapIteration {
  int n = 0;
  double delta = 0.0;
  double sqrt_delta = 0.0;
  // exact_recursion: the integer optimum (integer-valued double, exact up to
  // 2^53, continuum 2/delta beyond); closed_form: the real-valued formula.
  double photon_number = 0.0;
  double delta_phi = 0.0;
};

enum class BootstrapMethod {
  exact_recursion,
  closed_form,
};

struct BootstrapSchedule {
  std::vector<BootstrapIteration> iterations;
  bool feasible = false;
  BootstrapMethod method = BootstrapMethod::exact_recursion;
  bool saturated = false;  // stopped early on double-precision underflow
};

// Rows n = 0..steps of the exact recursion. An infeasible delta_0 returns
// feasible = false with no iterations.
BootstrapSchedule iterate_exact(double delta0, int steps);

// The quoted closed-form pair delta_n = ((e/2) delta_0)^(2^n) and
// N_n = 2 (N_0 / e)^(2^n), evaluated verbatim for comparison. Note it does
// not reproduce the initial condition at n = 0.
BootstrapSchedule closed_form_schedule(double delta0, double n0, int steps);

struct TrajectoryComparison {
  BootstrapSchedule exact;
  BootstrapSchedule closed_form;
  // Commonly quoted example values (10, ~180, 1e5 photons at n = 0, 2, 3);
  // populated only when the starting point matches that scenario (N_0 = 10).
  std::vector<std::optional<double>> reference_photons;
  std::vector<std::string> warnings;
};

// Side-by-side table of the exact recursion, the closed form, and the quoted
// reference trajectory, with the discrepancies spelled out.
TrajectoryComparison compare_trajectories(double delta0, int steps);

struct DelayLineSpec {
  double wave_number = 0.0;  // rad / length, > 0
  double delta_l = 0.0;      // delay-length error, >= 0
};

// sqrt(delta) = k * delta_l, and its inverse.
double phase_std_from_delay(const DelayLineSpec& spec);
double delay_from_phase_std(double wave_number, double sqrt_delta);

}  // namespace noon
