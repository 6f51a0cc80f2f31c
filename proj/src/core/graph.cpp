#include "core/graph.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace sekwl {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t* duplicates,
                        std::size_t* self_loops) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t loops = 0;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      fail(ErrorKind::contract, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") references a node >= n=" + std::to_string(n));
    }
    if (u == v) {
      ++loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());
  std::size_t dups = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());
  if (duplicates) *duplicates = dups;
  if (self_loops) *self_loops = loops;

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : canon) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
              g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]));
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::permuted(std::span<const NodeId> perm) const {
  if (perm.size() != node_count()) fail(ErrorKind::contract, "permutation size mismatch");
  std::vector<Edge> mapped;
  mapped.reserve(edge_count());
  for (auto [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return from_edges(node_count(), mapped);
}

Graph Graph::induced(std::span<const NodeId> nodes) const {
  std::vector<NodeId> local(node_count(), NodeId(-1));
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (NodeId w : neighbors(nodes[i])) {
      NodeId j = local[w];
      if (j != NodeId(-1) && i < j) sub.emplace_back(static_cast<NodeId>(i), j);
    }
  }
  return from_edges(nodes.size(), sub);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  auto shift = static_cast<NodeId>(a.node_count());
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.node_count() + b.node_count(), edges);
}

std::size_t connected_components(const Graph& g) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack;
  std::size_t count = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

}  // namespace sekwl
