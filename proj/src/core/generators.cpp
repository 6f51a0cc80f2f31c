#include "core/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <vector>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace sekwl {

const char* const kGeneratorGrammar =
    "spec := term ('+' term)*   ('+' = disjoint union)\n"
    "term := cycle:n=N | complete:n=N | star:n=N | path:n=N | rook4x4 | shrikhande\n"
    "      | random_regular:n=N,r=R[,seed=S] | erdos_renyi:n=N,p=P[,seed=S]";

Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorKind::domain, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(0, static_cast<NodeId>(i));
  return Graph::from_edges(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
  return Graph::from_edges(n, e);
}

namespace {

NodeId z4(int row, int col) { return static_cast<NodeId>(((row % 4 + 4) % 4) * 4 + (col % 4 + 4) % 4); }

}  // namespace

Graph rook4x4() {
  std::vector<Edge> e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 1; k < 4; ++k) {
        e.emplace_back(z4(r, c), z4(r, c + k));
        e.emplace_back(z4(r, c), z4(r + k, c));
      }
  return Graph::from_edges(16, e);
}

Graph shrikhande() {
  static constexpr int kSteps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<Edge> e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (auto [dr, dc] : kSteps) e.emplace_back(z4(r, c), z4(r + dr, c + dc));
  return Graph::from_edges(16, e);
}

Graph random_regular(std::size_t n, std::size_t r, std::uint64_t seed) {
  if ((n * r) % 2 != 0) fail(ErrorKind::domain, "random_regular: n*r must be even");
  if (r >= n && n > 0) fail(ErrorKind::domain, "random_regular: r must be < n");
  Rng rng(seed);
  std::vector<NodeId> points(n * r);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<NodeId>(i / r);

  constexpr std::size_t kMaxRestarts = 1'000'000;
  std::vector<Edge> edges;
  for (std::size_t attempt = 0; attempt < kMaxRestarts; ++attempt) {
    rng.shuffle(points.begin(), points.end());
    edges.clear();
    bool simple = true;
    for (std::size_t i = 0; i < points.size(); i += 2) {
      NodeId a = std::min(points[i], points[i + 1]);
      NodeId b = std::max(points[i], points[i + 1]);
      if (a == b) {
        simple = false;
        break;
      }
      edges.emplace_back(a, b);
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edges(n, edges);
  }
  fail(ErrorKind::domain, "random_regular: pairing model did not produce a simple graph");
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::domain, "erdos_renyi: p must lie in [0,1]");
  Rng rng(seed);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.unit() < p) e.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return Graph::from_edges(n, e);
}

namespace {

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  fail(ErrorKind::usage, "bad generator spec '" + std::string(spec) + "': " + why + "\n" + kGeneratorGrammar);
}

Graph generate_term(std::string_view term, std::uint64_t default_seed) {
  auto colon = term.find(':');
  std::string kind(term.substr(0, colon));
  std::map<std::string, std::string, std::less<>> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = term.substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      auto kv = rest.substr(0, comma);
      auto eq = kv.find('=');
      if (eq == std::string_view::npos || eq == 0) bad_spec(term, "expected key=value");
      if (!params.emplace(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1))).second) {
        bad_spec(term, "repeated parameter '" + std::string(kv.substr(0, eq)) + "'");
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  std::vector<std::string> used;
  auto get_uint = [&](const char* key, std::optional<std::uint64_t> fallback = std::nullopt) -> std::uint64_t {
    auto it = params.find(key);
    if (it == params.end()) {
      if (fallback) return *fallback;
      bad_spec(term, std::string("missing ") + key);
    }
    used.emplace_back(key);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(it->second.data(), it->second.data() + it->second.size(), v);
    if (ec != std::errc{} || ptr != it->second.data() + it->second.size()) bad_spec(term, std::string("bad ") + key);
    return v;
  };
  auto get_real = [&](const char* key) -> double {
    auto it = params.find(key);
    if (it == params.end()) bad_spec(term, std::string("missing ") + key);
    used.emplace_back(key);
    try {
      std::size_t idx = 0;
      double v = std::stod(it->second, &idx);
      if (idx != it->second.size()) bad_spec(term, std::string("bad ") + key);
      return v;
    } catch (const std::logic_error&) {
      bad_spec(term, std::string("bad ") + key);
    }
  };

  Graph g;
  if (kind == "cycle") {
    g = cycle_graph(get_uint("n"));
  } else if (kind == "complete") {
    g = complete_graph(get_uint("n"));
  } else if (kind == "star") {
    g = star_graph(get_uint("n"));
  } else if (kind == "path") {
    g = path_graph(get_uint("n"));
  } else if (kind == "rook4x4") {
    g = rook4x4();
  } else if (kind == "shrikhande") {
    g = shrikhande();
  } else if (kind == "random_regular") {
    auto n = get_uint("n");
    auto r = get_uint("r");
    g = random_regular(n, r, get_uint("seed", default_seed));
  } else if (kind == "erdos_renyi") {
    auto n = get_uint("n");
    auto p = get_real("p");
    g = erdos_renyi(n, p, get_uint("seed", default_seed));
  } else {
    bad_spec(term, "unknown kind '" + kind + "'");
  }
  for (const auto& [key, value] : params) {
    if (std::find(used.begin(), used.end(), key) == used.end()) bad_spec(term, "unknown parameter '" + key + "'");
  }
  return g;
}

}  // namespace

Graph generate(std::string_view spec, std::uint64_t default_seed) {
  if (spec.empty()) bad_spec(spec, "empty");
  std::optional<Graph> acc;
  for (std::uint64_t index = 0;; ++index) {
    auto plus = spec.find('+');
    auto term = spec.substr(0, plus);
    if (term.empty()) bad_spec(spec, "empty term");
    Graph g = generate_term(term, derive_seed(default_seed, 0, index));
    acc = acc ? disjoint_union(*acc, g) : std::move(g);
    if (plus == std::string_view::npos) break;
    spec = spec.substr(plus + 1);
  }
  return *std::move(acc);
}

}  // namespace sekwl
