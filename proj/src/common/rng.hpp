#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace flexarm {

// All stochastic behaviour in the project flows through this header. The
// engine is std::mt19937_64 (bit-exact across platforms); the distributions
// are implemented here because the standard library ones are not portable.

uint64_t splitmix64(uint64_t& state);

// Deterministic seed derivation: fold values/strings into a seed one at a
// time. Used to give every cell, episode and evaluation its own stream.
uint64_t mix_seed(uint64_t seed, uint64_t value);
uint64_t mix_seed(uint64_t seed, std::string_view tag);

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased integer in [0, n).
  uint64_t below(uint64_t n);

  // Standard normal via Box-Muller; second value of each pair is cached.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace flexarm
