#include <atomic>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "noon/parallel.hpp"
#include "noon/rng.hpp"

using noon::rng::Stream;

TEST_CASE("streams are reproducible and separated") {
  Stream a(123, 7);
  Stream b(123, 7);
  Stream c(123, 8);
  bool any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    any_diff = any_diff || (va != c.next_u64());
  }
  CHECK(any_diff);
}

TEST_CASE("unit draws live in (0, 1] and drive exact Bernoulli endpoints") {
  Stream stream(9, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = stream.next_unit();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
  Stream endpoints(9, 1);
  for (int i = 0; i < 1000; ++i) {
    CHECK(endpoints.next_bernoulli(1.0));
    CHECK_FALSE(endpoints.next_bernoulli(0.0));
  }
}

TEST_CASE("normal draws have the right first two moments") {
  Stream stream(2024, 3);
  const int count = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const double z = stream.next_normal();
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / count;
  const double variance = sum_sq / count - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(count)));
  CHECK(std::abs(variance - 1.0) < 4.0 * std::sqrt(2.0 / count));
}

TEST_CASE("pairwise_sum matches sequential summation") {
  std::vector<double> values(1001);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::sin(0.1 * static_cast<double>(i));
  }
  double sequential = 0.0;
  for (double v : values) sequential += v;
  CHECK(noon::pairwise_sum(values) == doctest::Approx(sequential).epsilon(1e-13));
}

TEST_CASE("for_each_index covers every index exactly once") {
  for (int threads : {1, 3, 8}) {
    std::vector<std::atomic<int>> hits(257);
    for (auto& h : hits) h.store(0);
    noon::for_each_index(hits.size(), threads,
                         [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
}
