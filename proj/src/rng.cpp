#include "matmeans/rng.hpp"

#include <cmath>
#include <numbers>

namespace matmeans {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr uint64_t kDeriveStep = 0xD1B54A32D192ED03ull;

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

uint64_t CounterRng::at(uint64_t seed, uint64_t counter) {
  return mix64(seed + (counter + 1) * kGolden);
}

uint64_t CounterRng::next_u64() { return at(seed_, counter_++); }

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_open_double() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  const double u1 = next_open_double();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex CounterRng::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return Complex(re, im);
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
  return mix64(seed + (index + 1) * kDeriveStep);
}

}  // namespace matmeans
