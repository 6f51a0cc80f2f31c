#include "core/sek_forward.hpp"

#include <cmath>

#include "core/ego.hpp"
#include "core/error.hpp"
#include "core/numeric.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace sekwl {

std::vector<double> CombineSpec::weights(std::uint32_t K) const {
  std::vector<double> w(K, 1.0);
  if (mode == CombineMode::geometric) {
    if (!(alpha > 0.0 && alpha <= 1.0)) fail(ErrorKind::domain, "geometric combine needs alpha in (0,1]");
    for (std::uint32_t k = 1; k <= K; ++k) w[k - 1] = alpha * std::pow(1.0 - alpha, static_cast<double>(k));
  }
  if (normalize) {
    double total = 0.0;
    for (double x : w) total += x;
    if (total > 0.0) {
      for (double& x : w) x /= total;
    } else {
      // alpha = 1 zeroes every hop weight; fall back to uniform.
      for (double& x : w) x = 1.0 / static_cast<double>(K);
    }
  }
  return w;
}

std::vector<NodeState> forward_layer(const Graph& g, const std::vector<NodeState>& states,
                                     const std::vector<SubstructureFeatures>& feats, std::uint32_t K,
                                     const CombineSpec& combine, const std::optional<SamplerSpec>& sampler) {
  const std::size_t n = g.node_count();
  if (K < 1) fail(ErrorKind::contract, "forward_layer needs K >= 1");
  if (states.size() != n || feats.size() != n) fail(ErrorKind::contract, "states/features must cover every node");
  if (sampler && sampler->per_hop_cap < 1) fail(ErrorKind::contract, "sampler cap must be positive");

  std::vector<std::vector<double>> tuples(n);
  const std::size_t width = n ? states[0].h.size() + feats[0].combined().size() : 0;
  const std::size_t layer = n ? states[0].layer + 1 : 1;
  for (std::size_t v = 0; v < n; ++v) {
    tuples[v] = states[v].h;
    auto f = feats[v].combined();
    tuples[v].insert(tuples[v].end(), f.begin(), f.end());
    if (tuples[v].size() != width) fail(ErrorKind::contract, "node state or feature width mismatch");
  }
  const auto theta = combine.weights(K);

  std::vector<NodeState> out(n);
  parallel_for(n, [&](std::size_t v) {
    auto hops = khop_neighbors(g, static_cast<NodeId>(v), K);
    std::vector<double> h(width, 0.0), terms;
    for (std::uint32_t k = 1; k <= K; ++k) {
      auto& members = hops[k - 1];
      if (sampler && members.size() > sampler->per_hop_cap) {
        Rng rng(derive_seed(sampler->seed, layer, static_cast<std::uint64_t>(v) * K + k));
        rng.shuffle(members.begin(), members.end());
        members.resize(sampler->per_hop_cap);
      }
      for (std::size_t c = 0; c < width; ++c) {
        terms.clear();
        terms.push_back(tuples[v][c]);
        for (NodeId u : members) terms.push_back(tuples[u][c]);
        h[c] += theta[k - 1] * std::tanh(multiset_sum(terms));
      }
    }
    out[v] = {std::move(h), layer};
  });
  return out;
}

std::vector<std::vector<NodeState>> forward(const Graph& g, const std::vector<SubstructureFeatures>& feats,
                                            std::uint32_t K, std::size_t layers, std::size_t width,
                                            const CombineSpec& combine, const std::optional<SamplerSpec>& sampler) {
  std::vector<NodeState> states(g.node_count(), NodeState{std::vector<double>(width, 1.0), 0});
  std::vector<std::vector<NodeState>> histories;
  for (std::size_t l = 0; l < layers; ++l) {
    states = forward_layer(g, states, feats, K, combine, sampler);
    histories.push_back(states);
  }
  return histories;
}

std::vector<double> jk_readout(const std::vector<std::vector<NodeState>>& histories, JkPool pool) {
  if (histories.empty()) fail(ErrorKind::contract, "jk_readout needs at least one layer");
  const std::size_t n = histories[0].size();
  std::vector<std::size_t> widths;
  for (const auto& layer : histories) {
    if (layer.size() != n) fail(ErrorKind::contract, "layers cover different node counts");
    const std::size_t w = n ? layer[0].h.size() : 0;
    for (const auto& s : layer) {
      if (s.h.size() != w) fail(ErrorKind::contract, "inconsistent node widths within a layer");
    }
    widths.push_back(w);
  }

  std::vector<std::vector<double>> pooled(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& p = pooled[v];
    for (const auto& layer : histories) {
      const auto& h = layer[v].h;
      if (pool == JkPool::concat) {
        p.insert(p.end(), h.begin(), h.end());
      } else {
        if (p.size() < h.size()) p.resize(h.size(), 0.0);
        for (std::size_t c = 0; c < h.size(); ++c) p[c] += h[c];
      }
    }
  }

  const std::size_t out_width = n ? pooled[0].size() : 0;
  std::vector<double> graph(out_width, 0.0), terms;
  for (std::size_t c = 0; c < out_width; ++c) {
    terms.clear();
    for (std::size_t v = 0; v < n; ++v) terms.push_back(pooled[v][c]);
    graph[c] = multiset_sum(terms);
  }
  return graph;
}

}  // namespace sekwl
