#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace sekwl {

inline constexpr std::uint32_t kUnreached = ~std::uint32_t{0};

/// BFS distances from `source`, truncated at `max_depth`; nodes further away
/// (or unreachable) get kUnreached.
std::vector<std::uint32_t> bfs_distances(const Graph& g, NodeId source, std::uint32_t max_depth = kUnreached);

/// Node sets N^1(u) .. N^K(u) under shortest-path distance; each set sorted.
std::vector<std::vector<NodeId>> khop_neighbors(const Graph& g, NodeId u, std::uint32_t K);

struct EgoMember {
  NodeId node;
  std::uint32_t distance;
  bool operator==(const EgoMember&) const = default;
};

/// K-hop ego-network G_u^K.
struct EgoNet {
  NodeId root = 0;
  std::uint32_t radius = 0;
  /// Sorted by (distance, node id); members[0] is the root.
  std::vector<EgoMember> members;
  /// Edges of the induced subgraph, (a, b) with a < b, sorted.
  std::vector<Edge> all_edges;
  /// all_edges minus every edge incident to the root.
  std::vector<Edge> internal_edges;

  std::vector<NodeId> nodes() const;
};

EgoNet extract_egonet(const Graph& g, NodeId u, std::uint32_t K);

/// counts[i-1] = number of nodes at distance k+1 having exactly i edges to
/// distance-k nodes. Trailing zeros are dropped.
struct EdgeConfiguration {
  std::uint32_t k = 0;
  std::vector<std::size_t> counts;

  /// Total number of edges between hop k and hop k+1.
  std::size_t weighted_total() const;
  bool operator==(const EdgeConfiguration&) const = default;
};

EdgeConfiguration edge_configuration(const Graph& g, NodeId u, std::uint32_t k);

struct IntersectionArray {
  std::vector<std::size_t> b;  // b_0 .. b_{D-1}
  std::vector<std::size_t> c;  // c_1 .. c_D
  std::size_t diameter() const { return c.size(); }
  bool operator==(const IntersectionArray&) const = default;
};

/// Returns the intersection array when g is distance-regular, nullopt
/// otherwise. Throws a domain error for disconnected graphs.
std::optional<IntersectionArray> intersection_array(const Graph& g);

/// "{b0,b1,...;c1,c2,...}"
std::string to_string(const IntersectionArray& ia);

}  // namespace sekwl
