#include "core/counting.hpp"

#include <vector>

#include "core/error.hpp"

namespace sekwl {

namespace {

SubstructureCounts closed_form(const Graph& g) {
  const std::size_t n = g.node_count();
  // trace(A^3) per node and trace(A^4) via rows of A^2.
  std::vector<std::uint64_t> closed3(n, 0);
  std::uint64_t trace4 = 0;
  std::vector<std::uint64_t> walks2(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    std::fill(walks2.begin(), walks2.end(), 0);
    for (NodeId u : g.neighbors(v))
      for (NodeId w : g.neighbors(u)) ++walks2[w];
    for (NodeId w = 0; w < n; ++w) trace4 += walks2[w] * walks2[w];
    for (NodeId u : g.neighbors(v)) closed3[v] += walks2[u];
  }

  SubstructureCounts c;
  std::uint64_t trace3 = 0;
  std::uint64_t degree_pairs = 0;
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    trace3 += closed3[v];
    degree_pairs += d * (d > 0 ? d - 1 : 0);
    c.three_stars += d >= 3 ? d * (d - 1) * (d - 2) / 6 : 0;
    // closed3[v] / 2 triangles contain v; each contributes deg(v) - 2 tails.
    c.tailed_triangles += closed3[v] / 2 * (d >= 2 ? d - 2 : 0);
  }
  c.triangles = trace3 / 6;
  c.four_cycles = (trace4 - 2 * g.edge_count() - 2 * degree_pairs) / 8;
  return c;
}

SubstructureCounts enumerate(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n > kEnumerateLimit) {
    fail(ErrorKind::capability, "enumeration is limited to n <= " + std::to_string(kEnumerateLimit));
  }
  auto adj = [&](std::size_t a, std::size_t b) { return g.has_edge(static_cast<NodeId>(a), static_cast<NodeId>(b)); };
  SubstructureCounts c;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t d = b + 1; d < n; ++d)
        if (adj(a, b) && adj(a, d) && adj(b, d)) ++c.triangles;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t d = b + 1; d < n; ++d)
        for (std::size_t e = d + 1; e < n; ++e) {
          const std::size_t q[4] = {a, b, d, e};
          for (int x = 0; x < 4; ++x) {
            // x is the odd one out: tail vertex or star centre.
            std::size_t o[3];
            for (int i = 0, j = 0; i < 4; ++i)
              if (i != x) o[j++] = q[i];
            const bool tri = adj(o[0], o[1]) && adj(o[0], o[2]) && adj(o[1], o[2]);
            if (tri) {
              for (auto y : o) c.tailed_triangles += adj(q[x], y) ? 1 : 0;
            }
            if (adj(q[x], o[0]) && adj(q[x], o[1]) && adj(q[x], o[2])) ++c.three_stars;
          }
          // The three ways to arrange four nodes on a cycle.
          if (adj(a, b) && adj(b, d) && adj(d, e) && adj(e, a)) ++c.four_cycles;
          if (adj(a, b) && adj(b, e) && adj(e, d) && adj(d, a)) ++c.four_cycles;
          if (adj(a, d) && adj(d, b) && adj(b, e) && adj(e, a)) ++c.four_cycles;
        }
  return c;
}

}  // namespace

SubstructureCounts count_substructures(const Graph& g, CountMethod method) {
  return method == CountMethod::closed_form ? closed_form(g) : enumerate(g);
}

}  // namespace sekwl
