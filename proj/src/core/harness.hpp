#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/counting.hpp"
#include "core/ego.hpp"
#include "core/graph.hpp"
#include "core/refine.hpp"

namespace sekwl {

/// First round whose colour histograms differ, with one colour whose class
/// sizes disagree.
struct Certificate {
  std::size_t iteration = 0;
  Color witness = 0;
  std::size_t count_first = 0;
  std::size_t count_second = 0;
};

struct Verdict {
  AlgorithmSpec algorithm;
  bool distinguished = false;
  GraphFingerprint first;
  GraphFingerprint second;
  std::optional<Certificate> certificate;
};

struct DiscriminationReport {
  GraphId first;
  GraphId second;
  std::vector<Verdict> verdicts;

  const Verdict* find(AlgorithmKind kind) const;
};

DiscriminationReport discriminate(const Graph& g1, const Graph& g2, const std::vector<AlgorithmSpec>& suite,
                                  GraphId id1 = {"g1", ""}, GraphId id2 = {"g2", ""});

/// Checks the hierarchy on one report: for every K, sek distinguishing is
/// implied by khop distinguishing, which is implied by wl1 distinguishing.
bool dominance_consistent(const DiscriminationReport& report);

/// ceil((1/2 + eps) * log(2n) / log(r - 1) + 1)
std::uint32_t theorem1_radius(std::size_t n, std::size_t r, double epsilon);

struct Theorem1Trial {
  std::size_t index = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  double epsilon = 0.0;
  std::uint64_t seed_first = 0;
  std::uint64_t seed_second = 0;
  NodeId root_first = 0;
  NodeId root_second = 0;
  std::uint32_t K_used = 0;
  std::optional<std::uint32_t> edge_config_differs_at;
  /// Configurations differ at the first differing k but the number of edges
  /// between the two hops coincides.
  bool collision = false;
  double max_gap = 0.0;
  bool self_return_separated = false;
};

struct Theorem1Summary {
  std::size_t trials = 0;
  std::size_t config_differing = 0;
  std::size_t separated_among_differing = 0;
  std::size_t collisions = 0;
  double separation_rate = 0.0;
  double collision_rate = 0.0;
};

inline constexpr double kSelfReturnTolerance = 1e-12;

/// Whether the 2K-step self-return vectors of (g1, u) and (g2, v) differ by
/// more than the tolerance in the infinity norm. Also reports the gap.
bool self_return_separated(const Graph& g1, NodeId u, const Graph& g2, NodeId v, std::size_t steps,
                           double* gap = nullptr);

struct Theorem1Result {
  std::vector<Theorem1Trial> trials;
  Theorem1Summary summary;
};

/// Trial i samples its two graphs from derive_seed(seed, 1, i) and
/// derive_seed(seed, 2, i) and its roots from derive_seed(seed, 3, i).
Theorem1Result theorem1_experiment(std::size_t n, std::size_t r, double epsilon, std::size_t trials,
                                   std::uint64_t seed);

struct CountingSeparation {
  std::size_t graphs = 0;
  std::size_t pairs_with_unequal_counts = 0;
  std::size_t separated = 0;
  double rate = 0.0;
  std::vector<SubstructureCounts> counts;
};

CountingSeparation counting_separation_check(const std::vector<Graph>& corpus, const AlgorithmSpec& sek);

}  // namespace sekwl
