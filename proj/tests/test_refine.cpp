#include <map>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/parallel.hpp"
#include "core/refine.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace sekwl;

namespace {

/// Textbook colour refinement with explicit signatures and dense relabelling.
/// Returns the partition after each of `rounds` rounds as class indices.
std::vector<std::vector<int>> reference_khop(const Graph& g, int K, std::size_t rounds) {
  const std::size_t n = g.node_count();
  auto d = oracle::distances(g);
  std::vector<std::vector<int>> out{std::vector<int>(n, 0)};
  for (std::size_t t = 0; t < rounds; ++t) {
    const auto& prev = out.back();
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sigs(n);
    for (NodeId v = 0; v < n; ++v) {
      sigs[v].push_back(prev[v]);
      for (int k = 1; k <= K; ++k) {
        std::vector<int> bag;
        for (auto u : oracle::hop(d, v, k)) bag.push_back(prev[u]);
        std::sort(bag.begin(), bag.end());
        sigs[v].push_back(-1 - static_cast<int>(bag.size()));
        sigs[v].insert(sigs[v].end(), bag.begin(), bag.end());
      }
      ids.emplace(sigs[v], 0);
    }
    int next_id = 0;
    for (auto& [sig, id] : ids) id = next_id++;
    std::vector<int> cur(n);
    for (NodeId v = 0; v < n; ++v) cur[v] = ids[sigs[v]];
    out.push_back(cur);
  }
  return out;
}

template <class A, class B>
bool same_partition(const std::vector<A>& a, const std::vector<B>& b) {
  std::map<A, B> fwd;
  std::map<B, A> back;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [f, fi] = fwd.emplace(a[i], b[i]);
    auto [r, ri] = back.emplace(b[i], a[i]);
    if (f->second != b[i] || r->second != a[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("wl1 and khop partitions match the reference refinement") {
  for (const auto& g : oracle::small_corpus()) {
    for (std::uint32_t K : {1u, 2u, 3u}) {
      auto r = khop_wl(g, K, 10);
      auto ref = reference_khop(g, static_cast<int>(K), r.history.size() - 1);
      for (std::size_t t = 0; t < r.history.size(); ++t) CHECK(same_partition(r.history[t].colors, ref[t]));
    }
  }
}

TEST_CASE("khop with K=1 is wl1 bit for bit") {
  for (const auto& g : oracle::small_corpus()) {
    auto a = wl1(g, 10), b = khop_wl(g, 1, 10);
    CHECK(a.fingerprint == b.fingerprint);
    REQUIRE(a.history.size() == b.history.size());
    for (std::size_t t = 0; t < a.history.size(); ++t) CHECK(a.history[t].colors == b.history[t].colors);
  }
}

TEST_CASE("stabilisation bookkeeping") {
  auto r = wl1(path_graph(5), 10);
  // Classes: 1, then {ends, inner}=2, then {ends, next, centre}=3, then 3.
  CHECK(r.partition_sizes() == std::vector<std::size_t>{1, 2, 3, 3});
  CHECK(r.stabilized);
  CHECK(r.stable_at == 2);
  CHECK(r.history.back().iteration == 3);

  auto capped = wl1(path_graph(9), 2);
  CHECK(!capped.stabilized);
  CHECK(capped.stable_at == 2);
  CHECK(capped.history.size() == 3);

  auto reg = wl1(cycle_graph(5), 10);
  CHECK(reg.partition_sizes() == std::vector<std::size_t>{1, 1});
  CHECK(reg.stable_at == 0);
  CHECK_THROWS_AS(wl1(cycle_graph(5), 0), Error);
}

TEST_CASE("refinement never merges classes") {
  for (const auto& g : oracle::small_corpus()) {
    for (const auto& spec : parse_suite("wl1,khop:K=2,subgraph:K=2,subgraph:K=1,variant=nested,sek:K=2,l=4")) {
      auto r = run(g, spec);
      auto sizes = r.partition_sizes();
      for (std::size_t t = 1; t < r.history.size(); ++t) {
        CHECK(sizes[t] >= sizes[t - 1]);
        CHECK(refines(r.history[t].colors, r.history[t - 1].colors));
      }
    }
  }
}

TEST_CASE("sek refines khop refines wl1 round by round") {
  for (const auto& g : oracle::small_corpus()) {
    for (std::uint32_t K : {1u, 2u, 3u}) {
      auto w = wl1(g, 6), k = khop_wl(g, K, 6), s = sek_wl(g, K, 6);
      const std::size_t rounds = std::min({w.history.size(), k.history.size(), s.history.size()});
      for (std::size_t t = 0; t < rounds; ++t) {
        CHECK(refines(k.history[t].colors, w.history[t].colors));
        CHECK(refines(s.history[t].colors, k.history[t].colors));
      }
    }
  }
}

TEST_CASE("fingerprints are invariant under relabelling") {
  const auto suite = parse_suite("wl1,khop:K=2,subgraph:K=2,subgraph:K=2,variant=nested,sek:K=2,l=6");
  auto corpus = oracle::small_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    auto perm = oracle::random_permutation(g.node_count(), i);
    auto h = g.permuted(perm);
    for (const auto& spec : suite) {
      auto a = run(g, spec), b = run(h, spec);
      CHECK(a.fingerprint == b.fingerprint);
      for (NodeId v = 0; v < g.node_count(); ++v) CHECK(a.final_colors()[v] == b.final_colors()[perm[v]]);
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  auto g = erdos_renyi(30, 0.2, 3);
  for (const auto& spec : parse_suite("khop:K=3,subgraph:K=2,variant=nested,sek:K=2")) {
    set_thread_count(1);
    auto a = run(g, spec);
    set_thread_count(5);
    auto b = run(g, spec);
    set_thread_count(0);
    CHECK(a.fingerprint == b.fingerprint);
  }
}

TEST_CASE("separations between small graph pairs") {
  auto two_triangles = disjoint_union(cycle_graph(3), cycle_graph(3));
  auto hexagon = cycle_graph(6);
  CHECK(wl1(two_triangles, 5).fingerprint == wl1(hexagon, 5).fingerprint);
  CHECK(khop_wl(two_triangles, 2, 5).fingerprint != khop_wl(hexagon, 2, 5).fingerprint);
  CHECK(sek_wl(two_triangles, 1, 5).fingerprint != sek_wl(hexagon, 1, 5).fingerprint);

  // Same hop counts around node 0, different edges inside the ego-net.
  auto g1 = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
  auto g2 = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(khop_wl(g1, 2, 1).history[1].colors[0] == khop_wl(g2, 2, 1).history[1].colors[0]);
  auto n1 = subgraph_wl(g1, 2, 1, SubgraphVariant::nested), n2 = subgraph_wl(g2, 2, 1, SubgraphVariant::nested);
  CHECK(n1.history[1].colors[0] != n2.history[1].colors[0]);
  CHECK(sek_wl(g1, 2, 1).history[1].colors[0] != sek_wl(g2, 2, 1).history[1].colors[0]);
}

TEST_CASE("rook and Shrikhande graphs") {
  auto rook = rook4x4(), shri = shrikhande();
  CHECK(wl1(rook, 10).fingerprint == wl1(shri, 10).fingerprint);
  CHECK(khop_wl(rook, 2, 10).fingerprint == khop_wl(shri, 2, 10).fingerprint);
  auto spec = parse_algorithm("sek:K=2,l=6");
  CHECK(run(rook, spec).fingerprint != run(shri, spec).fingerprint);
  // A whole-graph walk cannot tell two strongly regular graphs apart.
  auto global = parse_algorithm("sek:K=2,l=6,walk=graph,h=2");
  CHECK(run(rook, global).fingerprint == run(shri, global).fingerprint);
}

TEST_CASE("algorithm spec parsing") {
  auto s = parse_suite("wl1,khop:K=3,T=4,sek:K=2,l=6,agg=sum,subgraph:K=1,variant=nested", 7);
  REQUIRE(s.size() == 4);
  CHECK(s[0].kind == AlgorithmKind::wl1);
  CHECK(s[0].T == 7);
  CHECK(s[1].K == 3);
  CHECK(s[1].T == 4);
  CHECK(s[2].encoding.steps == 6);
  CHECK(s[2].encoding.agg == Aggregation::sum);
  CHECK(s[2].encoding.domain == WalkDomain::ego);
  CHECK(s[2].to_string() == "sek:K=2,T=7,l=6,h=1,agg=sum,walk=ego");
  CHECK(parse_algorithm(s[2].to_string()).to_string() == s[2].to_string());
  for (const char* bad : {"", "wl1:K=2", "khop:K=0", "sek:l=x", "foo", "K=2", "khop:K=2,", "subgraph:variant=deep",
                          "subgraph:K=2,variant=nested,l=3", "sek:K=2,color=red"}) {
    const std::string text = bad;
    CAPTURE(text);
    try {
      parse_suite(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::usage);
    }
  }
  CHECK_THROWS_AS(parse_algorithm("wl1,khop:K=2"), Error);
}
