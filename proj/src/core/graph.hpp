#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sekwl {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable simple undirected graph in compressed sparse row form.
///
/// Neighbor lists are sorted ascending, contain no self-loops and no
/// duplicates, and adjacency is symmetric.
class Graph {
 public:
  Graph() : offsets_{0} {}

  /// Builds from an arbitrary edge list. Self-loops and duplicate edges are
  /// dropped; the counts are reported through the optional out-params.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::size_t* duplicates = nullptr,
                          std::size_t* self_loops = nullptr);

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const NodeId> adjacency() const noexcept { return neighbors_; }

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Returns the graph with node u renamed to perm[u].
  Graph permuted(std::span<const NodeId> perm) const;

  /// Subgraph induced by `nodes`; local id i corresponds to nodes[i].
  Graph induced(std::span<const NodeId> nodes) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

/// Label plus provenance for a graph in a working set.
struct GraphId {
  std::string label;
  std::string source;
};

Graph disjoint_union(const Graph& a, const Graph& b);

std::size_t connected_components(const Graph& g);

}  // namespace sekwl
