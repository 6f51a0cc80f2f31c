#include "core/refine.hpp"

#include <charconv>
#include <functional>
#include <unordered_map>

#include "core/ego.hpp"
#include "core/error.hpp"
#include "core/parallel.hpp"

namespace sekwl {

namespace {

// Hash tags keep the input layouts of different algorithms apart. wl1 and
// khop share one tag so khop with K=1 reproduces wl1 bit for bit.
constexpr std::uint64_t kInitialColor = 0xc0;
constexpr std::uint64_t kTagNeighborhood = 1;
constexpr std::uint64_t kTagSubgraphEq5 = 2;
constexpr std::uint64_t kTagSubgraphNested = 3;
constexpr std::uint64_t kTagSek = 4;
constexpr std::uint64_t kTagInner = 5;
constexpr std::uint64_t kTagFingerprint = 6;

using RoundFn = std::function<Color(const std::vector<Color>& prev, NodeId v)>;

RefinementResult refine(const Graph& g, std::size_t T, const RoundFn& round) {
  if (T < 1) fail(ErrorKind::contract, "refinement needs T >= 1");
  const std::size_t n = g.node_count();
  RefinementResult r;
  r.history.push_back({std::vector<Color>(n, kInitialColor), 0});
  std::size_t classes = count_classes(r.history.back().colors);
  r.stable_at = T;
  for (std::size_t t = 1; t <= T; ++t) {
    std::vector<Color> next(n);
    const auto& prev = r.history.back().colors;
    parallel_for(n, [&](std::size_t v) { next[v] = round(prev, static_cast<NodeId>(v)); });
    std::size_t next_classes = count_classes(next);
    r.history.push_back({std::move(next), t});
    if (next_classes == classes) {
      r.stable_at = t - 1;
      r.stabilized = true;
      break;
    }
    classes = next_classes;
  }
  r.fingerprint = fingerprint(r);
  return r;
}

std::vector<std::vector<std::vector<NodeId>>> all_hops(const Graph& g, std::uint32_t K) {
  std::vector<std::vector<std::vector<NodeId>>> hops(g.node_count());
  parallel_for(g.node_count(), [&](std::size_t v) { hops[v] = khop_neighbors(g, static_cast<NodeId>(v), K); });
  return hops;
}

void add_hop_multisets(Hasher& h, const std::vector<Color>& prev, const std::vector<std::vector<NodeId>>& hops) {
  std::vector<std::uint64_t> bag;
  for (const auto& hop : hops) {
    bag.clear();
    for (NodeId u : hop) bag.push_back(prev[u]);
    h.add_multiset(bag);
  }
}

std::vector<std::uint64_t> feature_codes(const Graph& g, const EncodingSpec& enc) {
  auto feats = encode_graph(g, enc);
  std::vector<std::uint64_t> codes(g.node_count());
  for (std::size_t v = 0; v < feats.size(); ++v) codes[v] = hash_quantized(quantize(feats[v].combined()));
  return codes;
}

/// Colour refinement inside one ego-net, seeded with (hop distance, outer
/// colour), pooled into a single colour.
Color nested_readout(const Graph& sub, const std::vector<std::uint32_t>& distance, const std::vector<NodeId>& nodes,
                     const std::vector<Color>& outer) {
  const std::size_t s = nodes.size();
  std::vector<Color> cur(s), next(s);
  for (std::size_t i = 0; i < s; ++i) cur[i] = Hasher(kTagInner).add(distance[i]).add(outer[nodes[i]]).value();
  std::size_t classes = count_classes(cur);
  std::size_t rounds = 0;
  std::vector<std::uint64_t> bag;
  for (; rounds < s + 1; ++rounds) {
    for (std::size_t i = 0; i < s; ++i) {
      bag.clear();
      for (NodeId w : sub.neighbors(static_cast<NodeId>(i))) bag.push_back(cur[w]);
      next[i] = Hasher(kTagInner).add(cur[i]).add_multiset(bag).value();
    }
    cur.swap(next);
    std::size_t c = count_classes(cur);
    if (c == classes) break;
    classes = c;
  }
  std::vector<std::uint64_t> pool(cur.begin(), cur.end());
  return Hasher(kTagInner).add(rounds).add_multiset(pool).value();
}

}  // namespace

EncodingSpec default_refinement_encoding() {
  EncodingSpec e;
  e.steps = 8;
  e.radius = 1;
  e.agg = Aggregation::mean;
  e.domain = WalkDomain::ego;
  return e;
}

std::vector<std::size_t> RefinementResult::partition_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& h : history) out.push_back(count_classes(h.colors));
  return out;
}

std::size_t count_classes(const std::vector<Color>& colors) {
  std::vector<Color> c(colors);
  std::sort(c.begin(), c.end());
  return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

bool refines(const std::vector<Color>& fine, const std::vector<Color>& coarse) {
  if (fine.size() != coarse.size()) fail(ErrorKind::contract, "partition size mismatch");
  std::unordered_map<Color, Color> image;
  for (std::size_t v = 0; v < fine.size(); ++v) {
    auto [it, inserted] = image.emplace(fine[v], coarse[v]);
    if (!inserted && it->second != coarse[v]) return false;
  }
  return true;
}

GraphFingerprint fingerprint(const RefinementResult& r) {
  const auto& last = r.history.back();
  std::vector<std::uint64_t> bag(last.colors.begin(), last.colors.end());
  GraphFingerprint fp;
  fp.n = last.colors.size();
  fp.value = Hasher(kTagFingerprint).add(fp.n).add(last.iteration).add_multiset(bag).value();
  return fp;
}

RefinementResult wl1(const Graph& g, std::size_t T) {
  return refine(g, T, [&](const std::vector<Color>& prev, NodeId v) {
    std::vector<std::uint64_t> bag;
    for (NodeId u : g.neighbors(v)) bag.push_back(prev[u]);
    return Hasher(kTagNeighborhood).add(prev[v]).add_multiset(bag).value();
  });
}

RefinementResult khop_wl(const Graph& g, std::uint32_t K, std::size_t T) {
  if (K < 1) fail(ErrorKind::contract, "khop_wl needs K >= 1");
  auto hops = all_hops(g, K);
  return refine(g, T, [&](const std::vector<Color>& prev, NodeId v) {
    Hasher h(kTagNeighborhood);
    h.add(prev[v]);
    add_hop_multisets(h, prev, hops[v]);
    return h.value();
  });
}

RefinementResult subgraph_wl(const Graph& g, std::uint32_t K, std::size_t T, SubgraphVariant variant,
                             const EncodingSpec& enc) {
  if (K < 1) fail(ErrorKind::contract, "subgraph_wl needs K >= 1");
  if (variant == SubgraphVariant::eq5) {
    auto hops = all_hops(g, K);
    auto codes = feature_codes(g, enc);
    return refine(g, T, [&](const std::vector<Color>& prev, NodeId v) {
      Hasher h(kTagSubgraphEq5);
      h.add(prev[v]).add(codes[v]);
      add_hop_multisets(h, prev, hops[v]);
      return h.value();
    });
  }

  struct Ego {
    Graph sub;
    std::vector<NodeId> nodes;
    std::vector<std::uint32_t> distance;
  };
  std::vector<Ego> egos(g.node_count());
  parallel_for(g.node_count(), [&](std::size_t v) {
    auto ego = extract_egonet(g, static_cast<NodeId>(v), K);
    egos[v].nodes = ego.nodes();
    for (const auto& m : ego.members) egos[v].distance.push_back(m.distance);
    egos[v].sub = g.induced(egos[v].nodes);
  });
  return refine(g, T, [&](const std::vector<Color>& prev, NodeId v) {
    const auto& e = egos[v];
    return Hasher(kTagSubgraphNested).add(prev[v]).add(nested_readout(e.sub, e.distance, e.nodes, prev)).value();
  });
}

RefinementResult sek_wl(const Graph& g, std::uint32_t K, std::size_t T, const EncodingSpec& enc) {
  if (K < 1) fail(ErrorKind::contract, "sek_wl needs K >= 1");
  auto hops = all_hops(g, K);
  auto codes = feature_codes(g, enc);
  // Contextual multiset {{ f(G_u) : u in G_v^K, u != v }}, fixed across rounds.
  std::vector<std::uint64_t> context(g.node_count());
  parallel_for(g.node_count(), [&](std::size_t v) {
    std::vector<std::uint64_t> bag;
    for (const auto& hop : hops[v])
      for (NodeId u : hop) bag.push_back(codes[u]);
    context[v] = Hasher(kTagSek).add_multiset(bag).value();
  });
  return refine(g, T, [&](const std::vector<Color>& prev, NodeId v) {
    Hasher h(kTagSek);
    h.add(prev[v]).add(codes[v]).add(context[v]);
    add_hop_multisets(h, prev, hops[v]);
    return h.value();
  });
}

const char* const kAlgorithmGrammar =
    "suite := algo (',' algo)*\n"
    "algo  := wl1[:T=N] | khop:K=N[,T=N] | subgraph:K=N[,variant=eq5|nested][,l=N,h=N,agg=mean|sum,walk=ego|graph][,T=N]\n"
    "       | sek:K=N[,l=N][,h=N][,agg=mean|sum][,walk=ego|graph][,T=N]\n"
    "defaults: K=2 T=10 l=8 h=1 agg=mean walk=ego variant=eq5";

namespace {

[[noreturn]] void bad_algo(const std::string& text, const std::string& why) {
  fail(ErrorKind::usage, "bad algorithm spec '" + text + "': " + why + "\n" + kAlgorithmGrammar);
}

std::uint64_t parse_count(const std::string& text, const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_algo(text, "bad value for " + key);
  return v;
}

bool is_kind(const std::string& token) {
  auto name = token.substr(0, token.find(':'));
  return name == "wl1" || name == "khop" || name == "subgraph" || name == "sek";
}

void apply_param(AlgorithmSpec& spec, const std::string& text, const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos) bad_algo(text, "expected key=value, got '" + kv + "'");
  std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
  const bool encodes =
      spec.kind == AlgorithmKind::sek || (spec.kind == AlgorithmKind::subgraph && spec.variant == SubgraphVariant::eq5);
  if (key == "T") {
    spec.T = parse_count(text, key, value);
    if (spec.T < 1) bad_algo(text, "T must be >= 1");
  } else if (key == "K" && spec.kind != AlgorithmKind::wl1) {
    spec.K = static_cast<std::uint32_t>(parse_count(text, key, value));
    if (spec.K < 1) bad_algo(text, "K must be >= 1");
  } else if (key == "variant" && spec.kind == AlgorithmKind::subgraph) {
    if (value == "eq5") {
      spec.variant = SubgraphVariant::eq5;
    } else if (value == "nested") {
      spec.variant = SubgraphVariant::nested;
    } else {
      bad_algo(text, "variant must be eq5 or nested");
    }
  } else if (key == "l" && encodes) {
    spec.encoding.steps = parse_count(text, key, value);
    if (spec.encoding.steps < 1) bad_algo(text, "l must be >= 1");
  } else if (key == "h" && encodes) {
    spec.encoding.radius = static_cast<std::uint32_t>(parse_count(text, key, value));
    if (spec.encoding.radius < 1) bad_algo(text, "h must be >= 1");
  } else if (key == "agg" && encodes) {
    spec.encoding.agg = parse_aggregation(value);
  } else if (key == "walk" && encodes) {
    spec.encoding.domain = parse_walk_domain(value);
  } else {
    bad_algo(text, "unknown or inapplicable parameter '" + key + "'");
  }
}

}  // namespace

AlgorithmSpec parse_algorithm(const std::string& text, std::size_t default_T) {
  auto specs = parse_suite(text, default_T);
  if (specs.size() != 1) bad_algo(text, "expected exactly one algorithm");
  return specs.front();
}

std::vector<AlgorithmSpec> parse_suite(const std::string& text, std::size_t default_T) {
  std::vector<AlgorithmSpec> out;
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    tokens.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  // Parameters that only make sense for a variant are applied after the
  // variant is known.
  std::vector<std::vector<std::string>> params;
  for (const auto& tok : tokens) {
    if (tok.empty()) bad_algo(text, "empty entry");
    if (is_kind(tok)) {
      AlgorithmSpec spec;
      spec.T = default_T;
      auto colon = tok.find(':');
      auto name = tok.substr(0, colon);
      spec.kind = name == "wl1" ? AlgorithmKind::wl1
                  : name == "khop" ? AlgorithmKind::khop
                  : name == "subgraph" ? AlgorithmKind::subgraph
                                       : AlgorithmKind::sek;
      out.push_back(spec);
      params.emplace_back();
      if (colon != std::string::npos) params.back().push_back(tok.substr(colon + 1));
    } else {
      if (out.empty()) bad_algo(text, "parameter before any algorithm");
      params.back().push_back(tok);
    }
  }
  if (out.empty()) bad_algo(text, "empty suite");
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& kv : params[i]) {
      if (kv.starts_with("variant=")) apply_param(out[i], text, kv);
    }
    for (const auto& kv : params[i]) {
      if (!kv.starts_with("variant=")) apply_param(out[i], text, kv);
    }
  }
  return out;
}

std::string AlgorithmSpec::to_string() const {
  auto enc = [&] {
    return ",l=" + std::to_string(encoding.steps) + ",h=" + std::to_string(encoding.radius) +
           ",agg=" + sekwl::to_string(encoding.agg) + ",walk=" + sekwl::to_string(encoding.domain);
  };
  switch (kind) {
    case AlgorithmKind::wl1:
      return "wl1:T=" + std::to_string(T);
    case AlgorithmKind::khop:
      return "khop:K=" + std::to_string(K) + ",T=" + std::to_string(T);
    case AlgorithmKind::subgraph:
      if (variant == SubgraphVariant::nested)
        return "subgraph:K=" + std::to_string(K) + ",T=" + std::to_string(T) + ",variant=nested";
      return "subgraph:K=" + std::to_string(K) + ",T=" + std::to_string(T) + ",variant=eq5" + enc();
    case AlgorithmKind::sek:
      return "sek:K=" + std::to_string(K) + ",T=" + std::to_string(T) + enc();
  }
  return {};
}

RefinementResult run(const Graph& g, const AlgorithmSpec& spec) {
  switch (spec.kind) {
    case AlgorithmKind::wl1:
      return wl1(g, spec.T);
    case AlgorithmKind::khop:
      return khop_wl(g, spec.K, spec.T);
    case AlgorithmKind::subgraph:
      return subgraph_wl(g, spec.K, spec.T, spec.variant, spec.encoding);
    case AlgorithmKind::sek:
      return sek_wl(g, spec.K, spec.T, spec.encoding);
  }
  fail(ErrorKind::contract, "unknown algorithm");
}

}  // namespace sekwl
