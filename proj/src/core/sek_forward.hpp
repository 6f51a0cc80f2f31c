#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/graph.hpp"
#include "core/random_walk.hpp"

namespace sekwl {

struct NodeState {
  std::vector<double> h;
  std::size_t layer = 0;
  bool operator==(const NodeState&) const = default;
};

enum class CombineMode { sum, geometric };

struct CombineSpec {
  CombineMode mode = CombineMode::sum;
  double alpha = 0.5;
  bool normalize = false;

  /// theta_k for k = 1..K: 1 under sum; alpha (1 - alpha)^k under geometric,
  /// rescaled to sum to 1 when normalize is set.
  std::vector<double> weights(std::uint32_t K) const;
};

/// Per-hop neighbour sampling without replacement.
struct SamplerSpec {
  std::size_t per_hop_cap = 8;
  std::uint64_t seed = 0;
};

/// One parameter-free layer of K-hop message passing over (h_u, f_u) tuples:
///   m_v^k = (h_v ∥ f_v) + Σ_{u ∈ N^k(v)} (h_u ∥ f_u)
///   h_v^k = tanh(m_v^k)
///   h_v   = Σ_k θ_k h_v^k
/// The output width is the input width plus the feature width.
std::vector<NodeState> forward_layer(const Graph& g, const std::vector<NodeState>& states,
                                     const std::vector<SubstructureFeatures>& feats, std::uint32_t K,
                                     const CombineSpec& combine, const std::optional<SamplerSpec>& sampler = std::nullopt);

/// Runs `layers` layers from all-ones states of width `width` and returns the
/// per-layer outputs (histories[0] is layer 1).
std::vector<std::vector<NodeState>> forward(const Graph& g, const std::vector<SubstructureFeatures>& feats,
                                            std::uint32_t K, std::size_t layers, std::size_t width,
                                            const CombineSpec& combine,
                                            const std::optional<SamplerSpec>& sampler = std::nullopt);

enum class JkPool { sum, concat };

/// Jumping-knowledge pooling per node (sum across layers, shorter layers
/// zero-padded; or concatenation), then summation over nodes.
std::vector<double> jk_readout(const std::vector<std::vector<NodeState>>& histories, JkPool pool);

}  // namespace sekwl
