#pragma once

#include <cstdint>
#include <random>

namespace sekwl {

/// splitmix64 finalizer; also the seed-splitting primitive.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Child seed for (stream, index) under a master seed. Every random consumer
/// in the project derives its seed through this function:
///   derive_seed(m, s, i) = mix64(mix64(mix64(m) ^ s) ^ i)
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) noexcept {
  return mix64(mix64(mix64(master) ^ stream) ^ index);
}

/// Portable random source. std distributions are implementation-defined, so
/// bounded integers and unit doubles are drawn here directly from the
/// (fully specified) mt19937_64 output stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <class It>
  void shuffle(It first, It last) {
    auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) {
      auto j = below(i);
      std::iter_swap(first + static_cast<std::ptrdiff_t>(i - 1), first + static_cast<std::ptrdiff_t>(j));
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sekwl
