#pragma once

// Counter-based random streams for reproducible Monte Carlo.
//
// Every sample (or trial) i of a run owns the stream (seed, i). A stream is
// an xoshiro256++ generator whose state is expanded from the (seed, stream)
// counter pair through SplitMix64, so any worker can generate sample i
// without touching the streams of other samples. Results therefore depend
// only on (seed, sample index), never on scheduling.

#include <cmath>
#include <cstdint>
#include <numbers>

namespace noon::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_id) {
    // SplitMix64's additive constant doubles as the stream increment, so
    // distinct stream ids start at well-separated counter offsets.
    std::uint64_t sm = seed + 0x9E3779B97F4A7C15ULL * stream_id;
    for (auto& word : state_) word = splitmix64(sm);
    bool all_zero = true;
    for (auto word : state_) all_zero = all_zero && word == 0;
    if (all_zero) state_[0] = 0x1ULL;  // xoshiro must not start at zero
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in (0, 1]; the endpoint matters for exact Bernoulli(1).
  double next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (no rejection, fixed consumption).
  double next_normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  bool next_bernoulli(double p) { return next_unit() <= p; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace noon::rng
