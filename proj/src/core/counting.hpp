#pragma once

#include <cstdint>

#include "core/graph.hpp"

namespace sekwl {

/// Non-induced subgraph counts.
struct SubstructureCounts {
  std::uint64_t triangles = 0;
  std::uint64_t tailed_triangles = 0;
  std::uint64_t three_stars = 0;
  std::uint64_t four_cycles = 0;
  bool operator==(const SubstructureCounts&) const = default;
};

enum class CountMethod { closed_form, enumerate };

inline constexpr std::size_t kEnumerateLimit = 64;

/// closed_form uses walk traces and degree identities; enumerate visits every
/// node triple and 4-subset (n <= 64 only).
SubstructureCounts count_substructures(const Graph& g, CountMethod method);

}  // namespace sekwl
