#include <set>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/graph_io.hpp"
#include "core/rng.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace sekwl;

namespace {

bool is_simple_symmetric(const Graph& g) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto nb = g.neighbors(u);
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    for (NodeId v : nb) {
      if (v == u || !g.has_edge(v, u)) return false;
    }
  }
  return true;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::usage;
}

}  // namespace

TEST_CASE("from_edges drops loops and duplicates and symmetrises") {
  std::vector<Edge> edges{{0, 1}, {1, 0}, {2, 2}, {1, 2}, {0, 1}};
  std::size_t dups = 0, loops = 0;
  auto g = Graph::from_edges(4, edges, &dups, &loops);
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(dups == 2);
  CHECK(loops == 1);
  CHECK(g.degree(3) == 0);
  CHECK(is_simple_symmetric(g));
  CHECK(kind_of([] {
          std::vector<Edge> bad{{0, 5}};
          Graph::from_edges(3, bad);
        }) == ErrorKind::contract);
}

TEST_CASE("edge list parsing") {
  SUBCASE("comments, blank lines and header") {
    auto load = from_edge_list("# triangle\nn=5\n0 1\n\n1 2  # inline\n2 0\n");
    CHECK(load.graph.node_count() == 5);
    CHECK(load.graph.edge_count() == 3);
  }
  SUBCASE("duplicates and self-loops are counted, not kept") {
    auto load = from_edge_list("0 1\n1 0\n1 1\n1 2\n");
    CHECK(load.graph.edge_count() == 2);
    CHECK(load.duplicates == 1);
    CHECK(load.self_loops == 1);
  }
  SUBCASE("malformed lines report the line number") {
    try {
      from_edge_list("0 1\n1 x\n");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::parse);
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(kind_of([] { from_edge_list("0 1 2\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { from_edge_list("-1 2\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { from_edge_list("n=2\n0 3\n"); }) == ErrorKind::parse);
    CHECK(kind_of([] { from_edge_list("0 1\nn=4\n"); }) == ErrorKind::parse);
  }
  SUBCASE("writer round-trips, including trailing isolated nodes") {
    for (auto g : {cycle_graph(6), Graph::from_edges(5, std::vector<Edge>{{0, 1}}), Graph{}}) {
      CHECK(from_edge_list(to_edge_list(g)).graph == g);
    }
    auto text = to_edge_list(cycle_graph(6));
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
  }
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(Graph::from_edges(0, std::vector<Edge>{})) == "?");
  auto star = from_graph6("D?{");
  REQUIRE(star.size() == 1);
  CHECK(star[0].node_count() == 5);
  CHECK(star[0].edge_count() == 4);
  CHECK(star[0].degree(4) == 4);
  auto e = from_graph6("E?~o\n");
  REQUIRE(e.size() == 1);
  CHECK(e[0].node_count() == 6);
  CHECK(e[0].edge_count() == 8);
  CHECK(from_graph6(">>graph6<<Bw")[0] == complete_graph(3));
}

TEST_CASE("graph6 decodes bit order independently") {
  // Decode by hand: bits of the upper triangle in column-major order.
  auto g = erdos_renyi(9, 0.5, 3);
  auto text = to_graph6(g);
  REQUIRE(static_cast<unsigned char>(text[0]) == 63 + 9);
  std::vector<int> bits;
  for (std::size_t i = 1; i < text.size(); ++i) {
    int v = static_cast<unsigned char>(text[i]) - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  std::size_t idx = 0;
  for (NodeId j = 1; j < 9; ++j)
    for (NodeId i = 0; i < j; ++i) CHECK(bits[idx++] == (g.has_edge(i, j) ? 1 : 0));
  for (; idx < bits.size(); ++idx) CHECK(bits[idx] == 0);
}

TEST_CASE("graph6 round-trips random graphs including the long header") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 1 + i % 40;
    auto g = erdos_renyi(n, 0.25, derive_seed(5, 0, i));
    CHECK(from_graph6(to_graph6(g)).at(0) == g);
  }
  auto big = erdos_renyi(70, 0.05, 9);
  auto text = to_graph6(big);
  CHECK(static_cast<unsigned char>(text[0]) == 126);
  CHECK(from_graph6(text).at(0) == big);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK(kind_of([] { from_graph6("B w"); }) == ErrorKind::format);
  CHECK(kind_of([] { from_graph6("Bww"); }) == ErrorKind::format);
  CHECK(kind_of([] { from_graph6("~~????????"); }) == ErrorKind::capability);
  try {
    from_graph6("Bw\nA_\nB\x01");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("record 2") != std::string::npos);
  }
  CHECK(from_graph6("Bw\nA_\n").size() == 2);
}

TEST_CASE("format inference from file extensions") {
  CHECK(format_from_path("a/b.g6") == GraphFormat::graph6);
  CHECK(format_from_path("x.el") == GraphFormat::edge_list);
  CHECK(format_from_path("x.txt") == GraphFormat::edge_list);
  CHECK(kind_of([] { format_from_path("x.json"); }) == ErrorKind::usage);
  CHECK(kind_of([] { read_file("/nonexistent/dir/graph.el"); }) == ErrorKind::io);
}

TEST_CASE("named generators") {
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(star_graph(5).degree(0) == 4);
  CHECK(path_graph(4).edge_count() == 3);
  for (const auto& g : {rook4x4(), shrikhande()}) {
    CHECK(g.node_count() == 16);
    CHECK(g.edge_count() == 48);
    CHECK(is_simple_symmetric(g));
    for (NodeId u = 0; u < 16; ++u) CHECK(g.degree(u) == 6);
  }
  // Both are strongly regular (16,6,2,2): adjacent and non-adjacent pairs
  // share exactly two common neighbours.
  for (const auto& g : {rook4x4(), shrikhande()}) {
    auto a = oracle::adjacency_matrix(g);
    for (int u = 0; u < 16; ++u)
      for (int v = u + 1; v < 16; ++v) {
        int common = 0;
        for (int w = 0; w < 16; ++w) common += a[u][w] * a[v][w];
        CHECK(common == 2);
      }
  }
  CHECK(kind_of([] { cycle_graph(2); }) == ErrorKind::domain);
}

TEST_CASE("random regular graphs are simple, regular and seed-determined") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto g = random_regular(20, 3, s);
    CHECK(g.edge_count() == 30);
    CHECK(is_simple_symmetric(g));
    for (NodeId u = 0; u < 20; ++u) CHECK(g.degree(u) == 3);
    CHECK(g == random_regular(20, 3, s));
  }
  CHECK(random_regular(20, 3, 1) != random_regular(20, 3, 2));
  CHECK(kind_of([] { random_regular(7, 3, 0); }) == ErrorKind::domain);
  CHECK(kind_of([] { random_regular(4, 4, 0); }) == ErrorKind::domain);
}

TEST_CASE("erdos_renyi extremes and determinism") {
  CHECK(erdos_renyi(8, 0.0, 1).edge_count() == 0);
  CHECK(erdos_renyi(8, 1.0, 1).edge_count() == 28);
  CHECK(erdos_renyi(30, 0.3, 4) == erdos_renyi(30, 0.3, 4));
  CHECK(kind_of([] { erdos_renyi(5, 1.5, 0); }) == ErrorKind::domain);
}

TEST_CASE("generator spec strings") {
  CHECK(generate("rook4x4") == rook4x4());
  CHECK(generate("cycle:n=3+cycle:n=3") == disjoint_union(cycle_graph(3), cycle_graph(3)));
  CHECK(generate("random_regular:n=10,r=3,seed=1") == random_regular(10, 3, 1));
  CHECK(generate("erdos_renyi:n=10,p=0.4", 77) == erdos_renyi(10, 0.4, derive_seed(77, 0, 0)));
  auto pair = generate("erdos_renyi:n=10,p=0.5+erdos_renyi:n=10,p=0.5", 3);
  CHECK(pair == disjoint_union(erdos_renyi(10, 0.5, derive_seed(3, 0, 0)), erdos_renyi(10, 0.5, derive_seed(3, 0, 1))));
  for (const char* bad : {"", "nosuch", "cycle:m=3", "cycle:n=x", "cycle:n=3,", "cycle+", "cycle:", "cycle:n=3,n=4"}) {
    const std::string text = bad;
    CAPTURE(text);
    try {
      generate(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::usage);
      CHECK(std::string(e.what()).find("random_regular") != std::string::npos);
    }
  }
}

TEST_CASE("permutation, induced subgraphs and components") {
  auto g = erdos_renyi(12, 0.3, 8);
  auto perm = oracle::random_permutation(12, 1);
  auto h = g.permuted(perm);
  CHECK(h.edge_count() == g.edge_count());
  for (auto [u, v] : g.edges()) CHECK(h.has_edge(perm[u], perm[v]));

  std::vector<NodeId> nodes{4, 0, 2};
  auto sub = complete_graph(5).induced(nodes);
  CHECK(sub == complete_graph(3));

  CHECK(connected_components(disjoint_union(cycle_graph(3), cycle_graph(4))) == 2);
  CHECK(connected_components(Graph::from_edges(3, std::vector<Edge>{})) == 3);
}

TEST_CASE("derive_seed and the portable rng") {
  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t i = 0; i < 100; ++i) seen.insert(derive_seed(42, s, i));
  CHECK(seen.size() == 400);
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    auto x = a.below(7);
    CHECK(x < 7);
    CHECK(x == b.below(7));
    double u = a.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    b.unit();
  }
}
