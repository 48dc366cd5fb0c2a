#pragma once

#include <cstdint>
#include <random>

namespace lcsgap {

/// Named sub-streams derived from one user seed. Generators never share a
/// stream, so graph and family generation from the same seed are independent.
enum class Stream : std::uint64_t {
  kGraph = 1,
  kFamily = 2,
  kHeuristic = 3,
  kTrial = 4,
  kCandidate = 5,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Stream-splitting rule: seed' = mix64(mix64(seed ^ C1*stream) ^ C2*index).
/// Any (seed, stream, index) triple yields an independent engine seed.
std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                          std::uint64_t index = 0);

/// Deterministic PRNG wrapper around mt19937_64. Distribution helpers are
/// implemented here rather than via <random> distributions, whose outputs
/// differ between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lcsgap
