#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace isac {

/// SplitMix64 step; used to decorrelate per-trial seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for an independent stream (trial) derived from a base seed.
/// Pure function of its arguments, so scheduling cannot change results.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t stream) {
  std::uint64_t state = base_seed ^ (0xd1342543de82ef95ULL * (stream + 1));
  return splitmix64(state);
}

// Deterministic random source. Distributions are inverted by hand instead of
// going through std:: distribution objects, whose output is
// implementation-defined; the engine requires bit-identical draws for a given
// seed on every platform and thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Exponential with the given mean (inverse CDF of 1 - U).
  double exponential(double mean = 1.0) { return -mean * std::log1p(-uniform01()); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace isac
