#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "core/rng.hpp"

namespace sekwl {

using Color = std::uint64_t;

/// Seeded 64-bit absorbing hash used for every colour in the project.
class Hasher {
 public:
  static constexpr std::uint64_t kSeed = 0x5ec1f0c0ffee2024ULL;

  explicit Hasher(std::uint64_t tag = 0) : state_(mix64(kSeed ^ mix64(tag))) {}

  Hasher& add(std::uint64_t word) {
    state_ = mix64(std::rotl(state_, 23) ^ mix64(word + 0x632be59bd9b4e019ULL));
    return *this;
  }

  /// Absorbs a sequence as given (order significant), length-prefixed.
  Hasher& add_sequence(std::span<const std::uint64_t> words) {
    add(words.size());
    for (auto w : words) add(w);
    return *this;
  }

  /// Absorbs a multiset: sorts in place, then length-prefixed sequence.
  Hasher& add_multiset(std::vector<std::uint64_t>& words) {
    std::sort(words.begin(), words.end());
    return add_sequence(words);
  }

  std::uint64_t value() const { return mix64(state_); }

 private:
  std::uint64_t state_;
};

/// Feature vector on the integer lattice of resolution 10^-digits.
using QuantizedFeature = std::vector<std::int64_t>;

inline QuantizedFeature quantize(std::span<const double> values, int digits = 9) {
  const double scale = std::pow(10.0, digits);
  QuantizedFeature q;
  q.reserve(values.size());
  for (double v : values) q.push_back(std::llround(v * scale));
  return q;
}

inline std::uint64_t hash_quantized(const QuantizedFeature& q) {
  Hasher h(0xfea7);
  h.add(q.size());
  for (auto x : q) h.add(static_cast<std::uint64_t>(x));
  return h.value();
}

}  // namespace sekwl
