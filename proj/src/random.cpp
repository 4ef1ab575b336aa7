#include "arbsample/random.hpp"

namespace arbsample {

namespace {

// splitmix64: mixes seed material into well-spread engine seeds.
std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
  std::uint64_t s = seed;
  engine_.seed(splitmix64(s));
}

double RandomSource::next_double() {
  // 53 high bits -> [0, 1); identical on every conforming platform.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::next_below(std::uint64_t bound) {
  // Rejection below the largest multiple of bound; unbiased.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

RandomSource RandomSource::derived(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = a ^ counter;
  return RandomSource(splitmix64(s));
}

int sample_categorical(std::span<const double> weights, RandomSource& rng) {
  double total = 0.0;
  for (double w : weights) {
    if (w > 0.0) total += w;
  }
  if (!(total > 0.0)) return -1;
  const double r = rng.next_double() * total;
  double acc = 0.0;
  int last_positive = -1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last_positive = static_cast<int>(i);
    if (r < acc) return last_positive;
  }
  return last_positive;  // roundoff pushed r past the final cumulative sum
}

}  // namespace arbsample
