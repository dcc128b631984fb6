#pragma once

// Exact two-mode bosonic Fock algebra on the subspace of fixed total photon
// number n.
//
// Basis convention, used everywhere in this project: a state of n photons is
// an (n+1)-vector of complex amplitudes whose entry m multiplies the ket
// |n-m, m>, i.e. m counts photons in mode b, ascending. Density matrices use
// the same ordering for rows and columns.
//
// All types are immutable values after construction; operations are pure
// functions, so concurrent readers need no synchronization.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "noon/errors.hpp"

namespace noon {

using Complex = std::complex<double>;

class PureState {
 public:
  // Zero amplitudes on the n-photon subspace.
  explicit PureState(int total_photons);
  // Takes ownership of an amplitude vector of length total_photons + 1.
  PureState(int total_photons, Eigen::VectorXcd amplitudes);

  static PureState vacuum() { return basis(0, 0); }
  // Basis ket |n - m, m> with m photons in mode b.
  static PureState basis(int total_photons, int photons_in_b);

  int total_photons() const { return total_photons_; }
  int dim() const { return total_photons_ + 1; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(int m) const { return amplitudes_(m); }
  double squared_norm() const { return amplitudes_.squaredNorm(); }

 private:
  int total_photons_;
  Eigen::VectorXcd amplitudes_;
};

// (|N,0> + |0,N>)/sqrt(2). Rejects N = 0: no two-branch superposition exists.
PureState noon_state(int photon_number);

// Applies (a_dag + e^{i phase} b_dag) with the bosonic sqrt(m+1) matrix
// elements. Output is unnormalized and has one photon more than the input.
PureState apply_creation_factor(const PureState& state, double phase);

struct Normalized {
  PureState state;
  double squared_norm_before;
};

// Rescales to unit 2-norm and reports the squared norm it removed.
// Throws on zero or non-finite norm (the numeric overflow guard).
Normalized normalize(const PureState& state);

class DensityMatrix {
 public:
  enum class Norm {
    trace_one,       // tr(rho) = 1
    half_factorial,  // raw product average divided by 2 * N!; trace >= 1
  };

  DensityMatrix(Eigen::MatrixXcd matrix, Norm normalization);

  int total_photons() const { return static_cast<int>(matrix_.rows()) - 1; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  Norm normalization() const { return normalization_; }

  double trace_real() const { return matrix_.trace().real(); }
  // Rescaled copy with tag trace_one.
  DensityMatrix with_trace_one() const;

  // Invariant probes (used by tests and validation, not on hot paths).
  double hermiticity_defect() const;  // max entry of |M - M_dag|
  double smallest_eigenvalue() const;

 private:
  Eigen::MatrixXcd matrix_;
  Norm normalization_;
};

// |state><state| for a unit-norm state (tagged trace_one).
DensityMatrix outer_product(const PureState& state);

// Convex combination. Inputs must share photon number and normalization tag;
// trace_one output additionally requires the nonnegative weights to sum to 1.
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& parts);

// tr(rho * op).
Complex expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& op);

// |<b|a>|^2 for unit-norm states; global-phase invariant.
double fidelity(const PureState& a, const PureState& b);
// <b|rho|b>; rho must be trace_one.
double fidelity(const DensityMatrix& rho, const PureState& b);

// Fidelity with the noon family (|N,0> + e^{i theta}|0,N>)/sqrt(2), maximized
// over the branch phase theta. The factorized preparation produces the branch
// phase (-1)^(N+1), which a fixed phase shifter removes, so noon quality is
// judged against the family. Pure: (|a_0| + |a_N|)^2 / 2 for unit norm.
// Mixed: (rho_00 + rho_NN)/2 + |rho_0N|, trace_one input required.
double noon_fidelity(const PureState& state);
double noon_fidelity(const DensityMatrix& rho);

}  // namespace noon
