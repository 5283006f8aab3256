#pragma once

#include <cstdint>
#include <cmath>
#include <cstddef>
#include <vector>

namespace depadjust {

// Counter-based splitmix64 generator. Every random decision in the library
// flows through this class so that results are reproducible across platforms
// and independent of how work is scheduled: a task that needs randomness
// derives its own substream from (seed, task index) instead of sharing a
// stateful engine.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Stateless mixing function (splitmix64 finalizer).
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Derives the seed of substream `index` of a base seed. Substreams of
  // distinct indices behave as independent generators.
  static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix(mix(seed) + 0xBF58476D1CE4E5B9ULL * index);
  }

  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(substream_seed(seed, index));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1]; safe as a log() argument.
  double next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x < threshold);
    return x % bound;
  }

  // Standard normal via Box-Muller. std::normal_distribution is not
  // reproducible across standard libraries, this is.
  double next_gaussian() {
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Fisher-Yates; identical results on every platform.
  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  // First k entries of a Fisher-Yates shuffle of 0..n-1: a uniform sample of
  // k distinct indices, in random order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    if (k > n) k = n;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(next_below(n - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
  }

private:
  std::uint64_t state_;
};

}  // namespace depadjust
