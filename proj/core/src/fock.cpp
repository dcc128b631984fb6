#include "noon/fock.hpp"

#include <cmath>
#include <string>

namespace noon {

namespace {

void require_same_photons(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": photon numbers differ (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

void require_trace_one(const DensityMatrix& rho, const char* what) {
  if (rho.normalization() != DensityMatrix::Norm::trace_one) {
    throw InvalidArgumentError(std::string(what) +
                               " requires a trace_one density matrix");
  }
}

}  // namespace

PureState::PureState(int total_photons)
    : total_photons_(total_photons),
      amplitudes_(Eigen::VectorXcd::Zero(total_photons + 1)) {
  if (total_photons < 0) {
    throw InvalidArgumentError("total_photons must be >= 0");
  }
}

PureState::PureState(int total_photons, Eigen::VectorXcd amplitudes)
    : total_photons_(total_photons), amplitudes_(std::move(amplitudes)) {
  if (total_photons < 0) {
    throw InvalidArgumentError("total_photons must be >= 0");
  }
  if (amplitudes_.size() != total_photons + 1) {
    throw DimensionError("amplitude vector must have length total_photons + 1");
  }
}

PureState PureState::basis(int total_photons, int photons_in_b) {
  PureState s(total_photons);
  if (photons_in_b < 0 || photons_in_b > total_photons) {
    throw InvalidArgumentError("photons_in_b out of range");
  }
  s.amplitudes_(photons_in_b) = 1.0;
  return s;
}

PureState noon_state(int photon_number) {
  if (photon_number < 1) {
    throw InvalidArgumentError(
        "noon_state requires N >= 1; N = 0 is degenerate");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(photon_number + 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  amps(0) = inv_sqrt2;
  amps(photon_number) = inv_sqrt2;
  return PureState(photon_number, std::move(amps));
}

PureState apply_creation_factor(const PureState& state, double phase) {
  const int n = state.total_photons();
  const Complex factor_b = std::polar(1.0, phase);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n + 2);
  for (int m = 0; m <= n; ++m) {
    const Complex amp = state.amplitude(m);
    // a_dag |n-m, m> = sqrt(n-m+1) |n+1-m, m>
    out(m) += std::sqrt(static_cast<double>(n - m + 1)) * amp;
    // b_dag |n-m, m> = sqrt(m+1) |n-m, m+1>
    out(m + 1) += factor_b * std::sqrt(static_cast<double>(m + 1)) * amp;
  }
  return PureState(n + 1, std::move(out));
}

Normalized normalize(const PureState& state) {
  const double sq = state.squared_norm();
  if (!std::isfinite(sq) || sq <= 0.0) {
    throw Error("cannot normalize: squared norm is " + std::to_string(sq));
  }
  return Normalized{
      PureState(state.total_photons(), state.amplitudes() / std::sqrt(sq)),
      sq};
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix, Norm normalization)
    : matrix_(std::move(matrix)), normalization_(normalization) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw DimensionError("density matrix must be square and nonempty");
  }
}

DensityMatrix DensityMatrix::with_trace_one() const {
  const double t = trace_real();
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error("cannot renormalize: trace is " + std::to_string(t));
  }
  return DensityMatrix(matrix_ / t, Norm::trace_one);
}

double DensityMatrix::hermiticity_defect() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::smallest_eigenvalue() const {
  const Eigen::MatrixXcd herm = 0.5 * (matrix_ + matrix_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm,
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

DensityMatrix outer_product(const PureState& state) {
  if (std::abs(state.squared_norm() - 1.0) > 1e-9) {
    throw InvalidArgumentError("outer_product expects a unit-norm state");
  }
  Eigen::MatrixXcd m = state.amplitudes() * state.amplitudes().adjoint();
  return DensityMatrix(std::move(m), DensityMatrix::Norm::trace_one);
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& parts) {
  if (parts.empty()) {
    throw InvalidArgumentError("mix requires at least one component");
  }
  const int n = parts.front().second.total_photons();
  const auto tag = parts.front().second.normalization();
  double weight_sum = 0.0;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (const auto& [weight, rho] : parts) {
    require_same_photons(n, rho.total_photons(), "mix");
    if (rho.normalization() != tag) {
      throw InvalidArgumentError("mix requires a common normalization tag");
    }
    if (weight < 0.0) {
      throw InvalidArgumentError("mix weights must be nonnegative");
    }
    weight_sum += weight;
    acc += weight * rho.matrix();
  }
  if (tag == DensityMatrix::Norm::trace_one &&
      std::abs(weight_sum - 1.0) > 1e-9) {
    throw InvalidArgumentError(
        "trace_one mixture requires weights summing to 1");
  }
  return DensityMatrix(std::move(acc), tag);
}

Complex expectation(const DensityMatrix& rho, const Eigen::MatrixXcd& op) {
  if (op.rows() != rho.dim() || op.cols() != rho.dim()) {
    throw DimensionError("expectation: operator dimension mismatch");
  }
  return (rho.matrix() * op).trace();
}

double fidelity(const PureState& a, const PureState& b) {
  require_same_photons(a.total_photons(), b.total_photons(), "fidelity");
  const Complex overlap = b.amplitudes().dot(a.amplitudes());
  return std::norm(overlap);
}

double fidelity(const DensityMatrix& rho, const PureState& b) {
  require_same_photons(rho.total_photons(), b.total_photons(), "fidelity");
  require_trace_one(rho, "fidelity");
  const Complex value =
      (b.amplitudes().adjoint() * rho.matrix() * b.amplitudes())(0, 0);
  return value.real();
}

double noon_fidelity(const PureState& state) {
  const int n = state.total_photons();
  if (n < 1) {
    throw InvalidArgumentError("noon_fidelity requires at least one photon");
  }
  const double sq = state.squared_norm();
  if (!(sq > 0.0) || !std::isfinite(sq)) {
    throw Error("noon_fidelity: state has invalid norm");
  }
  const double a0 = std::abs(state.amplitude(0));
  const double an = std::abs(state.amplitude(n));
  const double s = a0 + an;
  return 0.5 * s * s / sq;
}

double noon_fidelity(const DensityMatrix& rho) {
  const int n = rho.total_photons();
  if (n < 1) {
    throw InvalidArgumentError("noon_fidelity requires at least one photon");
  }
  require_trace_one(rho, "noon_fidelity");
  const auto& m = rho.matrix();
  return 0.5 * (m(0, 0).real() + m(n, n).real()) + std::abs(m(0, n));
}

}  // namespace noon
