#include "core/random_walk.hpp"

#include <cstdio>

#include "core/ego.hpp"
#include "core/error.hpp"
#include "core/numeric.hpp"
#include "core/parallel.hpp"

namespace sekwl {

void lazy_walk_step(const Graph& g, const std::vector<double>& current, std::vector<double>& next) {
  const std::size_t n = g.node_count();
  next.assign(n, 0.0);
  std::vector<double> terms;
  for (NodeId v = 0; v < n; ++v) {
    terms.clear();
    if (current[v] != 0.0) terms.push_back(current[v] / static_cast<double>(g.degree(v) + 1));
    for (NodeId w : g.neighbors(v)) {
      if (current[w] != 0.0) terms.push_back(current[w] / static_cast<double>(g.degree(w) + 1));
    }
    next[v] = multiset_sum(terms);
  }
}

LandingProbRow landing_prob_row(const Graph& g, NodeId u, std::size_t t) {
  if (u >= g.node_count()) fail(ErrorKind::contract, "node id out of range");
  LandingProbRow row{u, t, std::vector<double>(g.node_count(), 0.0)};
  row.probs[u] = 1.0;
  std::vector<double> scratch;
  for (std::size_t s = 0; s < t; ++s) {
    lazy_walk_step(g, row.probs, scratch);
    row.probs.swap(scratch);
  }
  return row;
}

std::vector<double> self_return_vector(const Graph& g, NodeId u, std::size_t l) {
  if (u >= g.node_count()) fail(ErrorKind::contract, "node id out of range");
  std::vector<double> out;
  out.reserve(l);
  std::vector<double> row(g.node_count(), 0.0), scratch;
  row[u] = 1.0;
  for (std::size_t t = 1; t <= l; ++t) {
    lazy_walk_step(g, row, scratch);
    row.swap(scratch);
    out.push_back(row[u]);
  }
  return out;
}

std::vector<double> SubstructureFeatures::combined() const {
  std::vector<double> out;
  out.reserve(f1.size() + f2.size() + f3.size());
  out.insert(out.end(), f1.begin(), f1.end());
  out.insert(out.end(), f2.begin(), f2.end());
  out.insert(out.end(), f3.begin(), f3.end());
  return out;
}

namespace {

void check_spec(const EncodingSpec& spec) {
  if (spec.steps < 1) fail(ErrorKind::contract, "encoding needs l >= 1");
  if (spec.radius < 1) fail(ErrorKind::contract, "encoding needs K >= 1");
}

double aggregate(std::vector<double>& terms, Aggregation agg) {
  if (terms.empty()) return 0.0;
  double s = multiset_sum(terms);
  return agg == Aggregation::mean ? s / static_cast<double>(terms.size()) : s;
}

/// Fills step t of `out` for root `u`. `row(i)` yields node i's current row
/// (indexed by the same ids as `hops`).
template <class RowOf>
void accumulate_step(SubstructureFeatures& out, NodeId u, const std::vector<std::vector<NodeId>>& hops,
                     std::size_t t, Aggregation agg, RowOf&& row) {
  const auto& root_row = row(u);
  out.f1[t - 1] = root_row[u];
  std::vector<double> terms, inner;
  for (std::size_t k = 1; k <= hops.size(); ++k) {
    const auto& hop = hops[k - 1];
    terms.clear();
    for (NodeId i : hop) terms.push_back(root_row[i]);
    out.f2[(k - 1) * out.steps + (t - 1)] = aggregate(terms, agg);

    // Ordered pairs (i, j), i != j. Summed per i, then over i, so the result
    // depends only on the multiset structure.
    terms.clear();
    for (NodeId i : hop) {
      const auto& ri = row(i);
      inner.clear();
      for (NodeId j : hop) {
        if (j != i) inner.push_back(ri[j]);
      }
      terms.push_back(multiset_sum(inner));
    }
    double s = multiset_sum(terms);
    const std::size_t pairs = hop.size() * (hop.size() > 0 ? hop.size() - 1 : 0);
    double value = 0.0;
    if (pairs > 0) value = agg == Aggregation::mean ? s / static_cast<double>(pairs) : s;
    out.f3[(k - 1) * out.steps + (t - 1)] = value;
  }
}

SubstructureFeatures blank(NodeId u, const EncodingSpec& spec) {
  SubstructureFeatures f;
  f.node = u;
  f.steps = spec.steps;
  f.radius = spec.radius;
  f.f1.assign(spec.steps, 0.0);
  f.f2.assign(spec.radius * spec.steps, 0.0);
  f.f3.assign(spec.radius * spec.steps, 0.0);
  return f;
}

/// Encodes `root` of `h` keeping rows only for the root's ball.
SubstructureFeatures encode_in(const Graph& h, NodeId root, NodeId reported_id, const EncodingSpec& spec) {
  auto hops = khop_neighbors(h, root, spec.radius);
  std::vector<NodeId> ball{root};
  for (const auto& hop : hops) ball.insert(ball.end(), hop.begin(), hop.end());
  std::vector<std::uint32_t> slot(h.node_count(), kUnreached);
  for (std::size_t i = 0; i < ball.size(); ++i) slot[ball[i]] = static_cast<std::uint32_t>(i);

  std::vector<std::vector<double>> rows(ball.size(), std::vector<double>(h.node_count(), 0.0));
  for (std::size_t i = 0; i < ball.size(); ++i) rows[i][ball[i]] = 1.0;
  std::vector<double> scratch;

  auto out = blank(reported_id, spec);
  for (std::size_t t = 1; t <= spec.steps; ++t) {
    for (auto& r : rows) {
      lazy_walk_step(h, r, scratch);
      r.swap(scratch);
    }
    accumulate_step(out, root, hops, t, spec.agg, [&](NodeId i) -> const std::vector<double>& { return rows[slot[i]]; });
  }
  return out;
}

}  // namespace

SubstructureFeatures encode_node(const Graph& g, NodeId u, const EncodingSpec& spec) {
  check_spec(spec);
  if (u >= g.node_count()) fail(ErrorKind::contract, "node id out of range");
  if (spec.domain == WalkDomain::graph) return encode_in(g, u, u, spec);
  auto ego = extract_egonet(g, u, spec.radius);
  return encode_in(g.induced(ego.nodes()), 0, u, spec);
}

std::vector<SubstructureFeatures> encode_graph(const Graph& g, const EncodingSpec& spec) {
  check_spec(spec);
  const std::size_t n = g.node_count();
  std::vector<SubstructureFeatures> out(n);
  if (spec.domain == WalkDomain::ego) {
    parallel_for(n, [&](std::size_t u) { out[u] = encode_node(g, static_cast<NodeId>(u), spec); });
    return out;
  }

  // Whole-graph walk: one live row per source, advanced in lockstep.
  std::vector<std::vector<std::vector<NodeId>>> hops(n);
  parallel_for(n, [&](std::size_t u) {
    hops[u] = khop_neighbors(g, static_cast<NodeId>(u), spec.radius);
    out[u] = blank(static_cast<NodeId>(u), spec);
  });
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (std::size_t u = 0; u < n; ++u) rows[u][u] = 1.0;
  for (std::size_t t = 1; t <= spec.steps; ++t) {
    parallel_for(n, [&](std::size_t u) {
      std::vector<double> next;
      lazy_walk_step(g, rows[u], next);
      rows[u].swap(next);
    });
    parallel_for(n, [&](std::size_t u) {
      accumulate_step(out[u], static_cast<NodeId>(u), hops[u], t, spec.agg,
                      [&](NodeId i) -> const std::vector<double>& { return rows[i]; });
    });
  }
  return out;
}

const char* to_string(Aggregation agg) { return agg == Aggregation::mean ? "mean" : "sum"; }
const char* to_string(WalkDomain domain) { return domain == WalkDomain::graph ? "graph" : "ego"; }

Aggregation parse_aggregation(const std::string& s) {
  if (s == "mean") return Aggregation::mean;
  if (s == "sum") return Aggregation::sum;
  fail(ErrorKind::usage, "aggregation must be 'mean' or 'sum', got '" + s + "'");
}

WalkDomain parse_walk_domain(const std::string& s) {
  if (s == "graph") return WalkDomain::graph;
  if (s == "ego") return WalkDomain::ego;
  fail(ErrorKind::usage, "walk domain must be 'graph' or 'ego', got '" + s + "'");
}

std::string features_to_csv(const std::vector<SubstructureFeatures>& feats, const EncodingSpec& spec) {
  std::string out = "node";
  for (std::size_t t = 1; t <= spec.steps; ++t) out += ",f1_t" + std::to_string(t);
  for (const char* block : {"f2", "f3"}) {
    for (std::uint32_t k = 1; k <= spec.radius; ++k)
      for (std::size_t t = 1; t <= spec.steps; ++t)
        out += std::string(",") + block + "_k" + std::to_string(k) + "_t" + std::to_string(t);
  }
  out += '\n';
  char buf[40];
  for (const auto& f : feats) {
    out += std::to_string(f.node);
    for (double v : f.combined()) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace sekwl
