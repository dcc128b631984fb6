#include <cmath>
#include <numbers>

#include "doctest.h"
#include "noon/bootstrap.hpp"
#include "noon/metrology.hpp"

using namespace noon;

namespace {
constexpr double kE = std::numbers::e;
}

TEST_CASE("bootstrap feasibility threshold") {
  CHECK(can_bootstrap(0.25));   // sqrt = 0.5 < 2/e
  CHECK_FALSE(can_bootstrap(0.64));  // sqrt = 0.8 > 2/e
  // The boundary is the fixed point: strictly excluded.
  const double boundary = bootstrap_threshold_sqrt_delta() *
                          bootstrap_threshold_sqrt_delta();
  CHECK_FALSE(can_bootstrap(boundary));
  CHECK(can_bootstrap(std::nextafter(boundary, 0.0)));
  CHECK_THROWS_AS(can_bootstrap(0.0), InvalidArgumentError);
  CHECK(bootstrap_threshold_sqrt_delta() == doctest::Approx(0.735759).epsilon(1e-6));
}

TEST_CASE("exact recursion from delta = 0.2") {
  const BootstrapSchedule schedule = iterate_exact(0.2, 3);
  REQUIRE(schedule.feasible);
  REQUIRE(schedule.iterations.size() == 4);

  CHECK(schedule.iterations[0].delta == 0.2);
  CHECK(schedule.iterations[0].photon_number == 10.0);

  const double delta1 = (0.1 * kE) * (0.1 * kE);
  CHECK(schedule.iterations[1].delta == doctest::Approx(delta1).epsilon(1e-15));
  CHECK(schedule.iterations[1].photon_number == 27.0);

  CHECK(schedule.iterations[2].photon_number == 198.0);
  CHECK(schedule.iterations[3].photon_number ==
        doctest::Approx(1.06e4).epsilon(0.01));

  for (const auto& row : schedule.iterations) {
    // Each row carries the integer optimum and its bound.
    CHECK(row.photon_number ==
          static_cast<double>(optimal_photon_number(row.delta)));
    CHECK(row.delta_phi ==
          doctest::Approx(std::exp(0.5 * row.photon_number * row.delta) /
                          row.photon_number)
              .epsilon(1e-14));
    CHECK(row.sqrt_delta == doctest::Approx(std::sqrt(row.delta)));
  }
}

TEST_CASE("infeasible start yields an empty schedule") {
  const BootstrapSchedule schedule = iterate_exact(0.64, 5);
  CHECK_FALSE(schedule.feasible);
  CHECK(schedule.iterations.empty());
}

TEST_CASE("steps = 0 emits the single starting row") {
  const BootstrapSchedule schedule = iterate_exact(0.2, 0);
  REQUIRE(schedule.iterations.size() == 1);
  CHECK(schedule.iterations[0].delta == 0.2);
}

TEST_CASE("recursion matches the verified closed-form solution") {
  for (double delta0 : {0.05, 0.1, 0.2}) {
    const BootstrapSchedule schedule = iterate_exact(delta0, 6);
    REQUIRE(schedule.iterations.size() == 7);
    for (int n = 0; n <= 6; ++n) {
      const double from_recursion = schedule.iterations[n].delta;
      const double from_closed_form = closed_form_delta(delta0, n);
      CHECK(std::abs(from_recursion - from_closed_form) <=
            1e-12 * from_closed_form);
    }
  }
}

TEST_CASE("strict improvement whenever feasible") {
  for (double delta0 : {0.05, 0.2, 0.5}) {
    const BootstrapSchedule schedule = iterate_exact(delta0, 6);
    REQUIRE(schedule.feasible);
    for (std::size_t i = 1; i < schedule.iterations.size(); ++i) {
      CHECK(schedule.iterations[i].delta < schedule.iterations[i - 1].delta);
    }
  }
}

TEST_CASE("feasibility is equivalent to one-step improvement") {
  const double boundary = bootstrap_threshold_sqrt_delta() *
                          bootstrap_threshold_sqrt_delta();
  for (double delta :
       {0.01, 0.3, boundary * 0.999, boundary * 1.001, 0.9}) {
    CHECK(can_bootstrap(delta) == (next_delta(delta) < delta));
  }
}

TEST_CASE("quoted closed form misses its own initial condition") {
  const BootstrapSchedule closed = closed_form_schedule(0.2, 10.0, 2);
  REQUIRE(closed.iterations.size() == 3);
  // delta_0' = (e/2) delta_0, not delta_0.
  CHECK(closed.iterations[0].delta ==
        doctest::Approx(0.5 * kE * 0.2).epsilon(1e-14));
  CHECK(std::abs(closed.iterations[0].delta - 0.2) > 0.05);
  // N_2 = 2 (10/e)^4.
  CHECK(closed.iterations[2].photon_number ==
        doctest::Approx(2.0 * std::pow(10.0 / kE, 4.0)).epsilon(1e-12));
  CHECK(closed.iterations[2].photon_number == doctest::Approx(366.0).epsilon(0.01));
}

TEST_CASE("both engines share the doubling exponent asymptotically") {
  const BootstrapSchedule exact = iterate_exact(0.2, 8);
  const BootstrapSchedule closed = closed_form_schedule(0.2, 10.0, 8);
  REQUIRE(exact.iterations.size() >= 9);
  REQUIRE(closed.iterations.size() >= 9);
  // The engines differ by constant factors inside the 2^n exponent, so the
  // doubly-logarithmic error measures converge to a common line.
  const auto ratio_at = [&](int n) {
    return std::log(std::log(1.0 / exact.iterations[n].delta)) /
           std::log(std::log(1.0 / closed.iterations[n].delta));
  };
  CHECK(std::abs(ratio_at(8) - 1.0) < std::abs(ratio_at(2) - 1.0));
  CHECK(std::abs(ratio_at(8) - 1.0) < 0.06);
}

TEST_CASE("conjugated error is exactly affine in log log scale") {
  const double scale = (0.5 * kE) * (0.5 * kE);
  for (double delta0 : {0.05, 0.1, 0.2}) {
    const BootstrapSchedule schedule = iterate_exact(delta0, 6);
    const auto loglog = [&](int n) {
      return std::log(std::log(1.0 / (scale * schedule.iterations[n].delta)));
    };
    const double slope0 = loglog(1) - loglog(0);
    CHECK(slope0 == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    for (int n = 1; n < 6; ++n) {
      CHECK(loglog(n + 1) - loglog(n) ==
            doctest::Approx(std::log(2.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("trajectory comparison carries the reference values and warnings") {
  const TrajectoryComparison cmp = compare_trajectories(0.2, 3);
  REQUIRE(cmp.reference_photons.size() == 4);
  CHECK(cmp.reference_photons[0].value() == 10.0);
  CHECK_FALSE(cmp.reference_photons[1].has_value());
  CHECK(cmp.reference_photons[2].value() == 180.0);
  CHECK(cmp.reference_photons[3].value() == 1e5);
  CHECK(cmp.exact.iterations[2].photon_number == 198.0);
  CHECK(cmp.warnings.size() >= 2);

  // Away from the quoted scenario the reference column stays empty.
  const TrajectoryComparison other = compare_trajectories(0.1, 3);
  for (const auto& entry : other.reference_photons) {
    CHECK_FALSE(entry.has_value());
  }
  CHECK_FALSE(other.warnings.empty());
}

TEST_CASE("delay-line conversion") {
  const double wave_number = 2.0 * std::numbers::pi / 800e-9;
  const double sqrt_delta =
      phase_std_from_delay({wave_number, 25.46e-9});
  CHECK(sqrt_delta == doctest::Approx(0.2).epsilon(2.5e-3));

  CHECK(phase_std_from_delay({wave_number, 0.0}) == 0.0);

  for (double delta_l : {1e-9, 25.46e-9, 3.3e-7}) {
    const double round_trip =
        delay_from_phase_std(wave_number,
                             phase_std_from_delay({wave_number, delta_l}));
    CHECK(std::abs(round_trip - delta_l) <= 1e-12 * delta_l);
  }

  CHECK_THROWS_AS(phase_std_from_delay({0.0, 1e-9}), InvalidArgumentError);
  CHECK_THROWS_AS(delay_from_phase_std(-1.0, 0.1), InvalidArgumentError);
}

TEST_CASE("schedules are deterministic") {
  const BootstrapSchedule a = iterate_exact(0.13, 5);
  const BootstrapSchedule b = iterate_exact(0.13, 5);
  REQUIRE(a.iterations.size() == b.iterations.size());
  for (std::size_t i = 0; i < a.iterations.size(); ++i) {
    CHECK(a.iterations[i].delta == b.iterations[i].delta);
    CHECK(a.iterations[i].photon_number == b.iterations[i].photon_number);
    CHECK(a.iterations[i].delta_phi == b.iterations[i].delta_phi);
  }
}
