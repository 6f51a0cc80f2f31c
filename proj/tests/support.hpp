// Independent reference implementations and corpora shared by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/rng.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline std::vector<std::vector<int>> adjacency_matrix(const sekwl::Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

/// Row-stochastic lazy transition matrix (A + I) normalised by row.
inline Matrix transition(const sekwl::Graph& g) {
  auto a = adjacency_matrix(g);
  const std::size_t n = a.size();
  Matrix p(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 1;
    const double deg = std::accumulate(a[i].begin(), a[i].end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) p[i][j] = a[i][j] / deg;
  }
  return p;
}

inline Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix z(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
  return z;
}

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

/// powers[t] = P^t for t = 0..steps.
inline std::vector<Matrix> transition_powers(const sekwl::Graph& g, std::size_t steps) {
  auto p = transition(g);
  std::vector<Matrix> out{identity(g.node_count())};
  for (std::size_t t = 1; t <= steps; ++t) out.push_back(multiply(out.back(), p));
  return out;
}

/// All-pairs shortest paths by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const sekwl::Graph& g) {
  const std::size_t n = g.node_count();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Nodes at exactly distance k from u, ascending.
inline std::vector<sekwl::NodeId> hop(const std::vector<std::vector<int>>& d, sekwl::NodeId u, int k) {
  std::vector<sekwl::NodeId> out;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[u][v] == k) out.push_back(static_cast<sekwl::NodeId>(v));
  return out;
}

struct Counts {
  std::uint64_t triangles = 0, tailed = 0, stars = 0, four_cycles = 0;
};

/// Brute force over labelled node tuples, divided by automorphism counts.
inline Counts brute_counts(const sekwl::Graph& g) {
  auto a = adjacency_matrix(g);
  const std::size_t n = a.size();
  Counts c;
  std::uint64_t tri = 0, tail = 0, star = 0, cyc = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x || !a[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (a[y][z] && a[z][x]) tri++;
        for (std::size_t w = 0; w < n; ++w) {
          if (w == x || w == y || w == z) continue;
          // 4-cycle x-y-z-w-x
          if (a[y][z] && a[z][w] && a[w][x]) cyc++;
          // triangle x,y,z with tail x-w
          if (a[y][z] && a[z][x] && a[x][w]) tail++;
          // star centred at x with leaves y,z,w
          if (a[x][z] && a[x][w]) star++;
        }
      }
    }
  c.triangles = tri / 6;
  c.four_cycles = cyc / 8;
  c.tailed = tail / 2;
  c.stars = star / 6;
  return c;
}

inline std::vector<sekwl::NodeId> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<sekwl::NodeId> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Mixed small corpus: named graphs plus seeded random ones.
inline std::vector<sekwl::Graph> small_corpus() {
  using namespace sekwl;
  std::vector<Graph> out{cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3)), complete_graph(4),
                         star_graph(5),  path_graph(7),    rook4x4(), shrikhande()};
  for (std::uint64_t i = 0; i < 6; ++i) out.push_back(erdos_renyi(10 + i, 0.3, derive_seed(11, 0, i)));
  for (std::uint64_t i = 0; i < 3; ++i) out.push_back(random_regular(12, 3, derive_seed(11, 1, i)));
  return out;
}

}  // namespace oracle
