#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace sekwl {

/// Distribution of a lazy walk (on A + I, row-normalised) started at
/// `source`, after `steps` steps.
struct LandingProbRow {
  NodeId source = 0;
  std::size_t steps = 0;
  std::vector<double> probs;
};

/// One step: next[v] = sum over w in N[v] of current[w] / (deg(w) + 1).
void lazy_walk_step(const Graph& g, const std::vector<double>& current, std::vector<double>& next);

LandingProbRow landing_prob_row(const Graph& g, NodeId u, std::size_t t);

/// (H^1_uu, ..., H^l_uu).
std::vector<double> self_return_vector(const Graph& g, NodeId u, std::size_t l);

enum class Aggregation { mean, sum };

/// Where the walk behind f runs: on the whole graph, or restricted to the
/// node's induced ego-network of the encoding radius.
enum class WalkDomain { graph, ego };

struct EncodingSpec {
  std::size_t steps = 1;   // l
  std::uint32_t radius = 1;  // K of f(G_u^K, G)
  Aggregation agg = Aggregation::mean;
  WalkDomain domain = WalkDomain::graph;

  std::size_t width() const { return steps + 2 * radius * steps; }
  bool operator==(const EncodingSpec&) const = default;
};

/// Per-node substructure encoding: self-return probabilities (f1), root to
/// hop-k landing probabilities (f2) and landing probabilities between nodes
/// of the same hop (f3).
struct SubstructureFeatures {
  NodeId node = 0;
  std::size_t steps = 0;
  std::uint32_t radius = 0;
  std::vector<double> f1;  // [t-1]
  std::vector<double> f2;  // [(k-1) * steps + (t-1)]
  std::vector<double> f3;  // [(k-1) * steps + (t-1)]

  double f2_at(std::uint32_t k, std::size_t t) const { return f2[(k - 1) * steps + (t - 1)]; }
  double f3_at(std::uint32_t k, std::size_t t) const { return f3[(k - 1) * steps + (t - 1)]; }

  /// f1 ∥ f2 ∥ f3, length l + 2*K*l.
  std::vector<double> combined() const;
  bool operator==(const SubstructureFeatures&) const = default;
};

SubstructureFeatures encode_node(const Graph& g, NodeId u, const EncodingSpec& spec);
std::vector<SubstructureFeatures> encode_graph(const Graph& g, const EncodingSpec& spec);

const char* to_string(Aggregation agg);
const char* to_string(WalkDomain domain);
Aggregation parse_aggregation(const std::string& s);
WalkDomain parse_walk_domain(const std::string& s);

/// CSV export: header plus one row per node, values with 17 significant digits.
std::string features_to_csv(const std::vector<SubstructureFeatures>& feats, const EncodingSpec& spec);

}  // namespace sekwl
