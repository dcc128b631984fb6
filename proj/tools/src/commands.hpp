#pragma once

// The five noonsim commands. Each takes fully resolved options and returns a
// Report for the emitters; no I/O happens here.

#include <cstdint>
#include <optional>
#include <string>

#include "output.hpp"

namespace noonsim {

struct PrepareOptions {
  int photon_number = 1;
  double delta = 0.0;
  std::string method = "exact";  // "exact" | "mc"
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  int photon_cap = 20;
  bool emit_matrix = false;
  int threads = 1;
};

struct CurveOptions {
  double delta = 0.0;
  int n_min = 1;
  int n_max = 400;
};

struct BootstrapOptions {
  std::optional<double> delta0;
  std::optional<double> sqrt_delta0;
  int steps = 3;
  std::string method = "both";  // "exact" | "closed-form" | "both"
};

struct EstimateOptions {
  int photon_number = 1;
  double delta = 0.0;
  double phi_true = 0.0;
  std::int64_t shots = 10000;
  int trials = 500;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct FisherOptions {
  int photon_number = 1;
  double delta = 0.0;
  double phi_min = 0.0;
  double phi_max = 0.0;  // 0 means "pi / N" resolved at run time
  int points = 33;
  double step = 1e-4;
};

Report run_prepare(const PrepareOptions& options);
Report run_curve(const CurveOptions& options);
Report run_bootstrap(const BootstrapOptions& options);
Report run_estimate(const EstimateOptions& options);
Report run_fisher(const FisherOptions& options);

}  // namespace noonsim
