#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/hashing.hpp"
#include "core/random_walk.hpp"

namespace sekwl {

struct ColorAssignment {
  std::vector<Color> colors;
  std::size_t iteration = 0;
};

struct GraphFingerprint {
  std::uint64_t value = 0;
  std::size_t n = 0;
  bool operator==(const GraphFingerprint&) const = default;
};

/// history[t] holds the colours after round t. Refinement stops at the first
/// round whose partition equals the previous one (that confirming round is
/// the last entry) or after T rounds. stable_at is the first t whose
/// partition is never refined again; when T is hit first, stable_at = T and
/// stabilized = false.
struct RefinementResult {
  std::vector<ColorAssignment> history;
  std::size_t stable_at = 0;
  bool stabilized = false;
  GraphFingerprint fingerprint;

  const std::vector<Color>& final_colors() const { return history.back().colors; }
  /// Number of colour classes after each round.
  std::vector<std::size_t> partition_sizes() const;
};

enum class SubgraphVariant { eq5, nested };

/// Default substructure encoding for refinement: lazy walk restricted to the
/// radius-1 ego-net, 8 steps, mean aggregation.
EncodingSpec default_refinement_encoding();

RefinementResult wl1(const Graph& g, std::size_t T);
RefinementResult khop_wl(const Graph& g, std::uint32_t K, std::size_t T);
RefinementResult subgraph_wl(const Graph& g, std::uint32_t K, std::size_t T, SubgraphVariant variant,
                             const EncodingSpec& enc = default_refinement_encoding());
RefinementResult sek_wl(const Graph& g, std::uint32_t K, std::size_t T,
                        const EncodingSpec& enc = default_refinement_encoding());

/// Order-independent hash of the last round's colour multiset, mixed with n
/// and the round index.
GraphFingerprint fingerprint(const RefinementResult& r);

std::size_t count_classes(const std::vector<Color>& colors);

/// True iff every pair with equal colours in `fine` also has equal colours in
/// `coarse`.
bool refines(const std::vector<Color>& fine, const std::vector<Color>& coarse);

enum class AlgorithmKind { wl1, khop, subgraph, sek };

/// Parsed form of `wl1`, `khop:K=2`, `subgraph:K=2,variant=nested`,
/// `sek:K=2,l=6,h=1,agg=mean,walk=ego`; every key also accepts `T=`.
struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::wl1;
  std::uint32_t K = 2;
  std::size_t T = 10;
  SubgraphVariant variant = SubgraphVariant::eq5;
  EncodingSpec encoding = default_refinement_encoding();

  std::string to_string() const;
};

AlgorithmSpec parse_algorithm(const std::string& text, std::size_t default_T = 10);
std::vector<AlgorithmSpec> parse_suite(const std::string& text, std::size_t default_T = 10);

RefinementResult run(const Graph& g, const AlgorithmSpec& spec);

extern const char* const kAlgorithmGrammar;

}  // namespace sekwl
