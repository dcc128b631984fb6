#include <cmath>
#include <numbers>

#include "doctest.h"
#include "noon/noise.hpp"
#include "oracles.hpp"

using namespace noon;

namespace {

constexpr double kPi = std::numbers::pi;

double max_entry_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("NoiseModel defaults and validation") {
  const NoiseModel model(4, 0.1);
  REQUIRE(model.target_phases.size() == 4);
  for (int k = 1; k <= 4; ++k) {
    CHECK(model.target_phases[k - 1] == doctest::Approx(2.0 * kPi * k / 4.0));
  }
  CHECK_THROWS_AS(NoiseModel(0, 0.1), InvalidArgumentError);
  CHECK_THROWS_AS(NoiseModel(3, -0.1), InvalidArgumentError);
  CHECK_THROWS_AS(NoiseModel(3, 0.1, {0.0, 1.0}), DimensionError);
}

TEST_CASE("phase samples are reproducible and hit targets at delta = 0") {
  const NoiseModel noiseless(3, 0.0);
  const PhaseSample sample = draw_phase_sample(noiseless, 11, 5);
  REQUIRE(sample.phases.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(sample.phases[k] == noiseless.target_phases[k]);
  }

  const NoiseModel noisy(3, 0.2);
  const PhaseSample a = draw_phase_sample(noisy, 11, 5);
  const PhaseSample b = draw_phase_sample(noisy, 11, 5);
  const PhaseSample c = draw_phase_sample(noisy, 11, 6);
  CHECK(a.phases == b.phases);
  CHECK(a.phases != c.phases);
}

TEST_CASE("prepare_pure at exact targets reproduces noon states") {
  const NoiseModel two(2, 0.0);
  const PureState at_targets = prepare_pure(two, {kPi, 2.0 * kPi});
  CHECK(noon_fidelity(at_targets) == doctest::Approx(1.0).epsilon(1e-12));

  const NoiseModel three(3, 0.0);
  const PureState odd = prepare_pure(three, three.target_phases);
  CHECK(noon_fidelity(odd) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity(odd, noon_state(3)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("prepare_pure with a perturbed phase matches the expansion") {
  // (a_dag + e^{i(pi+0.1)} b_dag)(a_dag + b_dag)|0>: the noon-family fidelity
  // works out to 4 / (6 - 2 cos(0.1)).
  const NoiseModel model(2, 0.0);
  const PureState state = prepare_pure(model, {kPi + 0.1, 2.0 * kPi});
  const double expected = 4.0 / (6.0 - 2.0 * std::cos(0.1));
  CHECK(noon_fidelity(state) == doctest::Approx(expected).epsilon(1e-12));

  const Eigen::VectorXcd oracle =
      oracles::product_state({kPi + 0.1, 2.0 * kPi});
  CHECK(fidelity(state, PureState(2, oracle)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact single-photon average is the characteristic function") {
  const double delta = 0.3;
  const NoiseModel model(1, delta);
  const ExactMixed mixed = prepare_mixed_exact(model);
  const auto& m = mixed.trace_one.matrix();
  const Complex expected =
      0.5 * std::polar(std::exp(-0.5 * delta), -2.0 * kPi);
  CHECK(std::abs(m(0, 0) - Complex(0.5, 0)) < 1e-12);
  CHECK(std::abs(m(1, 1) - Complex(0.5, 0)) < 1e-12);
  CHECK(std::abs(m(0, 1) - expected) < 1e-12);
  CHECK(std::abs(m(1, 0) - std::conj(expected)) < 1e-12);
  CHECK(mixed.trace == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("noiseless exact average is a pure noon state") {
  for (int n : {1, 2, 3, 6, 11}) {
    const ExactMixed mixed = prepare_mixed_exact(NoiseModel(n, 0.0));
    const auto& half = mixed.half_factorial.matrix();
    CHECK(std::abs(std::abs(half(0, 0)) - 0.5) < 1e-14);
    CHECK(std::abs(std::abs(half(n, n)) - 0.5) < 1e-14);
    CHECK(std::abs(std::abs(half(0, n)) - 0.5) < 1e-12);
    CHECK(std::abs(std::abs(half(n, 0)) - 0.5) < 1e-12);
    CHECK(mixed.trace == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(noon_fidelity(mixed.trace_one) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("exact average matches the subset-pair oracle") {
  for (int n : {1, 2, 3, 5}) {
    for (double delta : {0.0, 0.07, 0.3}) {
      const NoiseModel model(n, delta);
      const ExactMixed mixed = prepare_mixed_exact(model);
      const Eigen::MatrixXcd oracle =
          oracles::mixed_half_factorial(model.target_phases, delta);
      CHECK(max_entry_diff(mixed.half_factorial.matrix(), oracle) < 1e-12);
    }
  }
}

TEST_CASE("exact average invariants") {
  for (int n : {1, 2, 4, 8, 12}) {
    for (double delta : {0.0, 0.1, 0.5}) {
      const ExactMixed mixed = prepare_mixed_exact(NoiseModel(n, delta));
      const auto& half = mixed.half_factorial.matrix();

      // Extreme populations are exactly 1/2 under the 1/(2 N!) normalization.
      CHECK(std::abs(half(0, 0).real() - 0.5) <= 1e-15);
      CHECK(std::abs(half(n, n).real() - 0.5) <= 1e-15);

      // Visibility law |<N,0|rho|0,N>| = e^{-N delta / 2} / 2.
      const double expected_off = 0.5 * std::exp(-0.5 * n * delta);
      CHECK(std::abs(std::abs(half(0, n)) - expected_off) <= 1e-12);

      // Trace exceeds 1 exactly when cross terms survive.
      CHECK(mixed.trace >= 1.0 - 1e-13);
      if (delta == 0.0 || n == 1) {
        CHECK(mixed.trace == doctest::Approx(1.0).epsilon(1e-13));
      } else {
        CHECK(mixed.trace > 1.0 + 1e-6);
      }

      CHECK(mixed.half_factorial.hermiticity_defect() <= 1e-12);
      CHECK(mixed.trace_one.smallest_eigenvalue() >= -1e-10);
    }
  }
}

TEST_CASE("exact average rejects photon numbers above the cap") {
  CHECK_THROWS_AS(prepare_mixed_exact(NoiseModel(21, 0.1)), CapacityError);
  const ExactMixed raised = prepare_mixed_exact(NoiseModel(21, 0.1), 25);
  CHECK(raised.trace_one.total_photons() == 21);
}

TEST_CASE("monte carlo at delta = 0 is the pure noon state") {
  const McMixed mc = prepare_mixed_mc(NoiseModel(4, 0.0), 64, 123);
  CHECK(noon_fidelity(mc.trace_one) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("monte carlo agrees with the exact average within 4 SE") {
  const NoiseModel model(2, 0.1);
  const ExactMixed exact = prepare_mixed_exact(model);
  const McMixed mc = prepare_mixed_mc(model, 100000, 7);
  for (int r = 0; r <= 2; ++r) {
    for (int c = 0; c <= 2; ++c) {
      const Complex diff =
          mc.half_factorial.matrix()(r, c) - exact.half_factorial.matrix()(r, c);
      CHECK(std::abs(diff.real()) <= 4.0 * mc.se_real(r, c) + 1e-14);
      CHECK(std::abs(diff.imag()) <= 4.0 * mc.se_imag(r, c) + 1e-14);
    }
  }
}

TEST_CASE("single-photon monte carlo visibility") {
  const NoiseModel model(1, 0.2);
  const McMixed mc = prepare_mixed_mc(model, 100000, 21);
  const double expected = 0.5 * std::exp(-0.1);
  const double se = std::hypot(mc.se_real(0, 1), mc.se_imag(0, 1));
  CHECK(std::abs(std::abs(mc.half_factorial.matrix()(0, 1)) - expected) <=
        4.0 * se + 1e-14);
}

TEST_CASE("monte carlo converges to the exact average as samples grow") {
  const NoiseModel model(3, 0.2);
  const ExactMixed exact = prepare_mixed_exact(model);
  double previous_scale = 1e300;
  for (std::size_t samples : {1000UL, 10000UL, 100000UL}) {
    const McMixed mc = prepare_mixed_mc(model, samples, 2024);
    double worst = 0.0;
    double max_se = 0.0;
    for (int r = 0; r <= 3; ++r) {
      for (int c = 0; c <= 3; ++c) {
        const Complex diff = mc.half_factorial.matrix()(r, c) -
                             exact.half_factorial.matrix()(r, c);
        const double se =
            std::max(1e-14, std::hypot(mc.se_real(r, c), mc.se_imag(r, c)));
        worst = std::max(worst, std::abs(diff) / se);
        max_se = std::max(max_se, se);
      }
    }
    CHECK(worst <= 5.0);  // SE-scaled residual stays O(1) at every size
    CHECK(max_se < previous_scale);
    previous_scale = max_se;
  }
}

TEST_CASE("monte carlo is deterministic for fixed seed at any thread count") {
  const NoiseModel model(3, 0.15);
  const McMixed serial = prepare_mixed_mc(model, 4219, 99, 1);
  const McMixed parallel = prepare_mixed_mc(model, 4219, 99, 4);
  CHECK(max_entry_diff(serial.half_factorial.matrix(),
                       parallel.half_factorial.matrix()) == 0.0);
  CHECK((serial.se_real - parallel.se_real).cwiseAbs().maxCoeff() == 0.0);
  const McMixed repeat = prepare_mixed_mc(model, 4219, 99, 1);
  CHECK(max_entry_diff(serial.half_factorial.matrix(),
                       repeat.half_factorial.matrix()) == 0.0);
}

TEST_CASE("noon_weight bookkeeping") {
  const ExactMixed noiseless = prepare_mixed_exact(NoiseModel(3, 0.0));
  CHECK(noon_weight(noiseless.trace_one) == doctest::Approx(1.0).epsilon(1e-12));

  const ExactMixed noisy = prepare_mixed_exact(NoiseModel(2, 0.1));
  const double middle = noisy.trace_one.matrix()(1, 1).real();
  CHECK(noon_weight(noisy.trace_one) + middle ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Monotone loss of subspace weight with growing noise.
  double previous = 1.1;
  for (double delta : {0.05, 0.2, 0.5, 1.0, 2.0}) {
    const double weight =
        noon_weight(prepare_mixed_exact(NoiseModel(4, delta)).trace_one);
    CHECK(weight < previous);
    CHECK(weight < 1.0);
    previous = weight;
  }

  CHECK_THROWS_AS(noon_weight(prepare_mixed_exact(NoiseModel(2, 0.1)).half_factorial),
                  InvalidArgumentError);
}

TEST_CASE("shifting every target by one slot only changes a global phase") {
  // Default targets 2 pi k / N versus 2 pi (k-1) / N: same downstream
  // fidelities and weights.
  for (int n : {2, 3, 5}) {
    std::vector<double> shifted(n);
    for (int k = 1; k <= n; ++k) shifted[k - 1] = 2.0 * kPi * (k - 1) / n;
    const NoiseModel base(n, 0.1);
    const NoiseModel alt(n, 0.1, shifted);
    const ExactMixed rho_base = prepare_mixed_exact(base);
    const ExactMixed rho_alt = prepare_mixed_exact(alt);
    CHECK(std::abs(noon_fidelity(rho_base.trace_one) -
                   noon_fidelity(rho_alt.trace_one)) < 1e-12);
    CHECK(std::abs(noon_weight(rho_base.trace_one) -
                   noon_weight(rho_alt.trace_one)) < 1e-12);
    CHECK(std::abs(rho_base.trace - rho_alt.trace) < 1e-12);
  }
}
