#include <cmath>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/parallel.hpp"
#include "core/sek_forward.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace sekwl;

namespace {

const EncodingSpec kEnc{3, 2, Aggregation::mean, WalkDomain::graph};

std::vector<NodeState> ones(std::size_t n, std::size_t width) {
  return std::vector<NodeState>(n, NodeState{std::vector<double>(width, 1.0), 0});
}

}  // namespace

TEST_CASE("one layer matches a direct evaluation") {
  auto g = erdos_renyi(9, 0.35, 2);
  auto feats = encode_graph(g, kEnc);
  auto d = oracle::distances(g);
  const std::uint32_t K = 2;
  CombineSpec combine{CombineMode::geometric, 0.3, false};
  auto out = forward_layer(g, ones(9, 2), feats, K, combine);
  for (NodeId v = 0; v < 9; ++v) {
    auto tuple = [&](NodeId u) {
      std::vector<double> x{1.0, 1.0};
      auto f = feats[u].combined();
      x.insert(x.end(), f.begin(), f.end());
      return x;
    };
    std::vector<double> want(2 + kEnc.width(), 0.0);
    for (int k = 1; k <= 2; ++k) {
      const double theta = 0.3 * std::pow(0.7, k);
      std::vector<double> m = tuple(v);
      for (auto u : oracle::hop(d, v, k)) {
        auto x = tuple(u);
        for (std::size_t c = 0; c < m.size(); ++c) m[c] += x[c];
      }
      for (std::size_t c = 0; c < m.size(); ++c) want[c] += theta * std::tanh(m[c]);
    }
    REQUIRE(out[v].h.size() == want.size());
    CHECK(out[v].layer == 1);
    for (std::size_t c = 0; c < want.size(); ++c) CHECK(std::abs(out[v].h[c] - want[c]) <= 1e-12);
  }
}

TEST_CASE("combine weights") {
  CHECK(CombineSpec{}.weights(3) == std::vector<double>{1, 1, 1});
  auto w = CombineSpec{CombineMode::geometric, 0.5, false}.weights(3);
  CHECK(w[0] == doctest::Approx(0.25));
  CHECK(w[1] == doctest::Approx(0.125));
  CHECK(w[2] == doctest::Approx(0.0625));
  auto n = CombineSpec{CombineMode::geometric, 0.5, true}.weights(3);
  CHECK(n[0] + n[1] + n[2] == doctest::Approx(1.0));
  auto one = CombineSpec{CombineMode::geometric, 1.0, true}.weights(2);
  CHECK(one == std::vector<double>{0.5, 0.5});
  CHECK_THROWS_AS(CombineSpec({CombineMode::geometric, 0.0, false}).weights(2), Error);
  CHECK_THROWS_AS(CombineSpec({CombineMode::geometric, 1.5, false}).weights(2), Error);
}

TEST_CASE("state width grows by the feature width each layer") {
  auto g = cycle_graph(7);
  auto feats = encode_graph(g, kEnc);
  auto hist = forward(g, feats, 2, 3, 4, CombineSpec{});
  REQUIRE(hist.size() == 3);
  for (std::size_t l = 0; l < 3; ++l) {
    CHECK(hist[l][0].layer == l + 1);
    CHECK(hist[l][0].h.size() == 4 + (l + 1) * kEnc.width());
  }
  CHECK(jk_readout(hist, JkPool::concat).size() == 3 * 4 + 6 * kEnc.width());
  CHECK(jk_readout(hist, JkPool::sum).size() == 4 + 3 * kEnc.width());
}

TEST_CASE("sampling is seeded and a large cap changes nothing") {
  auto g = erdos_renyi(30, 0.3, 4);
  auto feats = encode_graph(g, kEnc);
  auto full = forward(g, feats, 2, 2, 2, CombineSpec{});
  auto wide = forward(g, feats, 2, 2, 2, CombineSpec{}, SamplerSpec{1000, 9});
  CHECK(full == wide);
  auto a = forward(g, feats, 2, 2, 2, CombineSpec{}, SamplerSpec{3, 9});
  auto b = forward(g, feats, 2, 2, 2, CombineSpec{}, SamplerSpec{3, 9});
  auto c = forward(g, feats, 2, 2, 2, CombineSpec{}, SamplerSpec{3, 10});
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a != full);
  set_thread_count(1);
  auto serial = forward(g, feats, 2, 2, 2, CombineSpec{}, SamplerSpec{3, 9});
  set_thread_count(0);
  CHECK(serial == a);
}

TEST_CASE("readout is invariant under relabelling") {
  auto g = erdos_renyi(16, 0.3, 5);
  auto perm = oracle::random_permutation(16, 3);
  auto h = g.permuted(perm);
  for (auto pool : {JkPool::sum, JkPool::concat}) {
    auto a = jk_readout(forward(g, encode_graph(g, kEnc), 2, 2, 3, CombineSpec{}), pool);
    auto b = jk_readout(forward(h, encode_graph(h, kEnc), 2, 2, 3, CombineSpec{}), pool);
    CHECK(a == b);
  }
}

TEST_CASE("readout separates the triangle pair from the hexagon") {
  EncodingSpec ego{4, 1, Aggregation::mean, WalkDomain::ego};
  auto g1 = disjoint_union(cycle_graph(3), cycle_graph(3)), g2 = cycle_graph(6);
  auto a = jk_readout(forward(g1, encode_graph(g1, ego), 1, 1, 1, CombineSpec{}), JkPool::concat);
  auto b = jk_readout(forward(g2, encode_graph(g2, ego), 1, 1, 1, CombineSpec{}), JkPool::concat);
  CHECK(a != b);
}

TEST_CASE("contract violations") {
  auto g = cycle_graph(5);
  auto feats = encode_graph(g, kEnc);
  CHECK_THROWS_AS(forward_layer(g, ones(4, 2), feats, 2, CombineSpec{}), Error);
  auto states = ones(5, 2);
  states[3].h.push_back(0.0);
  CHECK_THROWS_AS(forward_layer(g, states, feats, 2, CombineSpec{}), Error);
  CHECK_THROWS_AS(forward_layer(g, ones(5, 2), feats, 0, CombineSpec{}), Error);
  CHECK_THROWS_AS(jk_readout({}, JkPool::sum), Error);
}
