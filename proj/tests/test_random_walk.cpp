#include <cmath>

#include "core/ego.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/parallel.hpp"
#include "core/random_walk.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace sekwl;

namespace {

/// Features of node u computed from dense powers of the transition matrix.
std::vector<double> dense_features(const Graph& g, NodeId u, const EncodingSpec& spec) {
  auto powers = oracle::transition_powers(g, spec.steps);
  auto d = oracle::distances(g);
  const bool mean = spec.agg == Aggregation::mean;
  std::vector<double> f1, f2, f3;
  for (std::size_t t = 1; t <= spec.steps; ++t) f1.push_back(powers[t][u][u]);
  for (std::uint32_t k = 1; k <= spec.radius; ++k) {
    auto hop = oracle::hop(d, u, static_cast<int>(k));
    for (std::size_t t = 1; t <= spec.steps; ++t) {
      double s2 = 0, s3 = 0;
      for (auto i : hop) s2 += powers[t][u][i];
      for (auto i : hop)
        for (auto j : hop)
          if (i != j) s3 += powers[t][i][j];
      const double pairs = static_cast<double>(hop.size() * (hop.empty() ? 0 : hop.size() - 1));
      f2.push_back(hop.empty() ? 0.0 : (mean ? s2 / hop.size() : s2));
      f3.push_back(pairs == 0 ? 0.0 : (mean ? s3 / pairs : s3));
    }
  }
  std::vector<double> out = f1;
  out.insert(out.end(), f2.begin(), f2.end());
  out.insert(out.end(), f3.begin(), f3.end());
  return out;
}

std::vector<Graph> random_small_graphs(std::size_t count, std::uint64_t seed) {
  std::vector<Graph> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + derive_seed(seed, 1, i) % 11;
    const double p = 0.15 + 0.5 * static_cast<double>(derive_seed(seed, 2, i) % 100) / 100.0;
    out.push_back(erdos_renyi(n, p, derive_seed(seed, 0, i)));
  }
  return out;
}

}  // namespace

TEST_CASE("landing rows agree with dense matrix powers") {
  for (const auto& g : random_small_graphs(30, 1)) {
    auto powers = oracle::transition_powers(g, 6);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (std::size_t t = 0; t <= 6; ++t) {
        auto row = landing_prob_row(g, u, t);
        for (NodeId v = 0; v < g.node_count(); ++v) CHECK(std::abs(row.probs[v] - powers[t][u][v]) <= 1e-10);
      }
    }
  }
}

TEST_CASE("landing rows are distributions supported on the t-ball") {
  for (const auto& g : random_small_graphs(30, 2)) {
    auto d = oracle::distances(g);
    for (NodeId u = 0; u < g.node_count(); ++u) {
      for (std::size_t t = 1; t <= 5; ++t) {
        auto row = landing_prob_row(g, u, t);
        double s = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
          s += row.probs[v];
          CHECK(row.probs[v] >= 0.0);
          const bool inside = d[u][v] >= 0 && d[u][v] <= static_cast<int>(t);
          if (!inside) CHECK(row.probs[v] == 0.0);
          if (inside) CHECK(row.probs[v] > 0.0);
        }
        CHECK(std::abs(s - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("self-return values on small cycles") {
  auto c6 = cycle_graph(6);
  auto v = self_return_vector(c6, 0, 3);
  CHECK(v[0] == doctest::Approx(1.0 / 3));
  CHECK(v[1] == doctest::Approx(1.0 / 3));
  CHECK(v[2] == doctest::Approx(7.0 / 27));
  auto c3 = self_return_vector(cycle_graph(3), 0, 3);
  for (double x : c3) CHECK(x == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(self_return_vector(c6, 6, 2), Error);
}

TEST_CASE("graph-domain encoding matches the dense oracle") {
  for (auto agg : {Aggregation::mean, Aggregation::sum}) {
    for (const auto& g : random_small_graphs(12, 3)) {
      EncodingSpec spec{4, 2, agg, WalkDomain::graph};
      auto feats = encode_graph(g, spec);
      REQUIRE(feats.size() == g.node_count());
      for (NodeId u = 0; u < g.node_count(); ++u) {
        auto want = dense_features(g, u, spec);
        auto got = feats[u].combined();
        REQUIRE(got.size() == spec.width());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-12);
        CHECK(feats[u] == encode_node(g, u, spec));
      }
    }
  }
}

TEST_CASE("ego-domain encoding equals graph-domain encoding of the induced ego-net") {
  for (const auto& g : random_small_graphs(8, 4)) {
    EncodingSpec spec{5, 1, Aggregation::mean, WalkDomain::ego};
    for (NodeId u = 0; u < g.node_count(); ++u) {
      auto ego = extract_egonet(g, u, 1);
      auto local = g.induced(ego.nodes());
      auto want = dense_features(local, 0, {5, 1, Aggregation::mean, WalkDomain::graph});
      auto got = encode_node(g, u, spec).combined();
      for (std::size_t i = 0; i < want.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= 1e-12);
    }
  }
}

TEST_CASE("ego domain separates a triangle from a hexagon") {
  EncodingSpec ego{2, 1, Aggregation::mean, WalkDomain::ego};
  auto c3 = encode_node(cycle_graph(3), 0, ego);
  auto c6 = encode_node(cycle_graph(6), 0, ego);
  CHECK(c3.f1[1] == doctest::Approx(1.0 / 3));
  CHECK(c6.f1[1] == doctest::Approx(4.0 / 9));
}

TEST_CASE("whole-graph features coincide on rook and Shrikhande graphs") {
  EncodingSpec spec{6, 2, Aggregation::mean, WalkDomain::graph};
  auto a = encode_node(rook4x4(), 0, spec).combined();
  auto b = encode_node(shrikhande(), 0, spec).combined();
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  spec.domain = WalkDomain::ego;
  spec.radius = 1;
  CHECK(encode_node(rook4x4(), 0, spec) != encode_node(shrikhande(), 0, spec));
}

TEST_CASE("isolated nodes and empty hops encode as zeros") {
  auto g = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  auto f = encode_node(g, 2, {3, 2, Aggregation::mean, WalkDomain::graph});
  for (double x : f.f1) CHECK(x == 1.0);
  for (double x : f.f2) CHECK(x == 0.0);
  for (double x : f.f3) CHECK(x == 0.0);
}

TEST_CASE("encoding is identical across thread counts") {
  auto g = erdos_renyi(40, 0.15, 5);
  for (auto domain : {WalkDomain::graph, WalkDomain::ego}) {
    EncodingSpec spec{6, 2, Aggregation::mean, domain};
    set_thread_count(1);
    auto a = encode_graph(g, spec);
    set_thread_count(7);
    auto b = encode_graph(g, spec);
    set_thread_count(0);
    CHECK(a == b);
  }
}

TEST_CASE("features are invariant under relabelling, bit for bit") {
  auto g = erdos_renyi(18, 0.3, 6);
  auto perm = oracle::random_permutation(18, 2);
  auto h = g.permuted(perm);
  EncodingSpec spec{5, 2, Aggregation::mean, WalkDomain::graph};
  auto a = encode_graph(g, spec), b = encode_graph(h, spec);
  for (NodeId u = 0; u < 18; ++u) CHECK(a[u].combined() == b[perm[u]].combined());
}

TEST_CASE("csv export") {
  EncodingSpec spec{2, 1, Aggregation::mean, WalkDomain::graph};
  auto csv = features_to_csv(encode_graph(cycle_graph(3), spec), spec);
  auto header = csv.substr(0, csv.find('\n'));
  CHECK(header == "node,f1_t1,f1_t2,f2_k1_t1,f2_k1_t2,f3_k1_t1,f3_k1_t2");
  CHECK(std::count(header.begin(), header.end(), ',') + 1 == 1 + 2 + 2 * 1 * 2);
  std::vector<std::string> rows;
  std::size_t pos = csv.find('\n') + 1;
  while (pos < csv.size()) {
    auto nl = csv.find('\n', pos);
    auto row = csv.substr(pos, nl - pos);
    rows.push_back(row.substr(row.find(',')));
    pos = nl + 1;
  }
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == rows[1]);
  CHECK(rows[1] == rows[2]);
}

TEST_CASE("invalid encoding parameters") {
  CHECK_THROWS_AS(encode_graph(cycle_graph(4), {0, 1, Aggregation::mean, WalkDomain::graph}), Error);
  CHECK_THROWS_AS(encode_graph(cycle_graph(4), {2, 0, Aggregation::mean, WalkDomain::graph}), Error);
  CHECK_THROWS_AS(parse_aggregation("max"), Error);
  CHECK_THROWS_AS(parse_walk_domain("local"), Error);
}
