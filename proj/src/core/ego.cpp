#include "core/ego.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace sekwl {

std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source, std::uint32_t max_depth) {
  std::vector<std::uint32_t> dist(g.node_count(), kUnreached);
  std::vector<NodeId> frontier{source}, next;
  dist[source] = 0;
  for (std::uint32_t d = 0; d < max_depth && !frontier.empty(); ++d) {
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] == kUnreached) {
          dist[v] = d + 1;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

std::vector<std::vector<NodeId>> khop_neighbors(const Graph& g, NodeId u, std::uint32_t K) {
  if (u >= g.node_count()) fail(ErrorKind::contract, "node id out of range");
  auto dist = bfs_distances(g, u, K);
  std::vector<std::vector<NodeId>> hops(K);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (dist[v] != kUnreached && dist[v] >= 1) hops[dist[v] - 1].push_back(v);
  }
  return hops;
}

std::vector<NodeId> EgoNet::nodes() const {
  std::vector<NodeId> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.node);
  return out;
}

EgoNet extract_egonet(const Graph& g, NodeId u, std::uint32_t K) {
  if (u >= g.node_count()) fail(ErrorKind::contract, "node id out of range");
  auto dist = bfs_distances(g, u, K);
  EgoNet ego;
  ego.root = u;
  ego.radius = K;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (dist[v] != kUnreached) ego.members.push_back({v, dist[v]});
  }
  std::stable_sort(ego.members.begin(), ego.members.end(),
                   [](const EgoMember& a, const EgoMember& b) { return a.distance < b.distance; });
  for (const auto& m : ego.members) {
    for (NodeId w : g.neighbors(m.node)) {
      if (m.node < w && dist[w] != kUnreached) ego.all_edges.emplace_back(m.node, w);
    }
  }
  std::sort(ego.all_edges.begin(), ego.all_edges.end());
  for (auto e : ego.all_edges) {
    if (e.first != u && e.second != u) ego.internal_edges.push_back(e);
  }
  return ego;
}

std::size_t EdgeConfiguration::weighted_total() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) total += (i + 1) * counts[i];
  return total;
}

EdgeConfiguration edge_configuration(const Graph& g, NodeId u, std::uint32_t k) {
  if (u >= g.node_count()) fail(ErrorKind::contract, "node id out of range");
  auto dist = bfs_distances(g, u, k + 1);
  EdgeConfiguration cfg;
  cfg.k = k;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (dist[v] != k + 1) continue;
    std::size_t back = 0;
    for (NodeId w : g.neighbors(v)) back += dist[w] == k ? 1 : 0;
    if (cfg.counts.size() < back) cfg.counts.resize(back, 0);
    ++cfg.counts[back - 1];
  }
  return cfg;
}

std::optional<IntersectionArray> intersection_array(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) fail(ErrorKind::domain, "intersection array of the empty graph is undefined");
  std::vector<std::vector<std::uint32_t>> dist(n);
  std::uint32_t diameter = 0;
  for (NodeId u = 0; u < n; ++u) {
    dist[u] = bfs_distances(g, u);
    for (auto d : dist[u]) {
      if (d == kUnreached) fail(ErrorKind::domain, "intersection array requires a connected graph");
      diameter = std::max(diameter, d);
    }
  }

  // table[d][i][j] = |N^i(u) ∩ N^j(v)| for any pair at distance d; it must be
  // the same for every such pair.
  const std::size_t D1 = diameter + 1;
  std::vector<long long> table(D1 * D1 * D1, -1);
  std::vector<long long> counts(D1 * D1);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      std::fill(counts.begin(), counts.end(), 0);
      for (NodeId w = 0; w < n; ++w) ++counts[dist[u][w] * D1 + dist[v][w]];
      long long* slot = &table[dist[u][v] * D1 * D1];
      for (std::size_t ij = 0; ij < D1 * D1; ++ij) {
        if (slot[ij] < 0) {
          slot[ij] = counts[ij];
        } else if (slot[ij] != counts[ij]) {
          return std::nullopt;
        }
      }
    }
  }

  // b_i = |N(u) ∩ N^{i+1}(v)|, c_i = |N(u) ∩ N^{i-1}(v)| with dis(u,v) = i.
  IntersectionArray ia;
  auto at = [&](std::size_t d, std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(table[d * D1 * D1 + i * D1 + j]);
  };
  for (std::size_t i = 0; i < diameter; ++i) ia.b.push_back(at(i, 1, i + 1));
  for (std::size_t i = 1; i <= diameter; ++i) ia.c.push_back(at(i, 1, i - 1));
  return ia;
}

std::string to_string(const IntersectionArray& ia) {
  std::string s = "{";
  for (std::size_t i = 0; i < ia.b.size(); ++i) s += (i ? "," : "") + std::to_string(ia.b[i]);
  s += ";";
  for (std::size_t i = 0; i < ia.c.size(); ++i) s += (i ? "," : "") + std::to_string(ia.c[i]);
  return s + "}";
}

}  // namespace sekwl
