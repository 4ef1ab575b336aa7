#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace arbsample {

/// Deterministic random stream. The same seed yields the same sequence of
/// draws on any platform (the engine is std::mt19937_64 and doubles are
/// extracted from raw bits, bypassing distribution classes whose output is
/// implementation-defined).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform in [0, 1).
  double next_double();

  /// Uniform in {0, ..., bound-1}.
  std::uint64_t next_below(std::uint64_t bound);

  /// Independent stream derived from (seed, counter). Used by the CLI to
  /// make sample i reproducible regardless of how many samples precede it.
  static RandomSource derived(std::uint64_t seed, std::uint64_t counter);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Draws an index with probability proportional to weights[i], skipping
/// non-positive entries: one uniform draw located in the cumulative sum.
/// Returns -1 when the total mass is not positive.
int sample_categorical(std::span<const double> weights, RandomSource& rng);

}  // namespace arbsample
