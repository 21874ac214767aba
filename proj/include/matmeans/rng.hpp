#pragma once

#include <cstdint>

#include "matmeans/matrix.hpp"

namespace matmeans {

/// Counter-based PRNG: SplitMix64 evaluated at (seed, counter). Output i is
/// mix64(seed + (i+1) * 0x9E3779B97F4A7C15). Stateless given (seed, counter),
/// so streams can be replayed and split without coordination. Test vectors are
/// pinned in the test suite and in the README.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t next_u64();
  /// uniform in [0, 1), 53-bit mantissa
  double next_double();
  /// uniform in (0, 1]
  double next_open_double();
  /// standard normal via Box-Muller (consumes two outputs)
  double next_gaussian();
  Complex next_complex_gaussian();

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

  static uint64_t at(uint64_t seed, uint64_t counter);

 private:
  uint64_t seed_;
  uint64_t counter_ = 0;
};

/// Derived child seed for stream `index` — a distinct odd-constant SplitMix64
/// walk so child streams do not collide with the parent output stream.
uint64_t derive_seed(uint64_t seed, uint64_t index);

}  // namespace matmeans
