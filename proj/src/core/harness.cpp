#include "core/harness.hpp"

#include <cmath>
#include <map>

#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/parallel.hpp"
#include "core/random_walk.hpp"
#include "core/rng.hpp"

namespace sekwl {

namespace {

std::map<Color, std::size_t> histogram(const std::vector<Color>& colors) {
  std::map<Color, std::size_t> h;
  for (auto c : colors) ++h[c];
  return h;
}

std::optional<Certificate> certify(const RefinementResult& a, const RefinementResult& b) {
  const std::size_t rounds = std::max(a.history.size(), b.history.size());
  for (std::size_t t = 0; t < rounds; ++t) {
    const auto& ca = a.history[std::min(t, a.history.size() - 1)];
    const auto& cb = b.history[std::min(t, b.history.size() - 1)];
    if (ca.iteration != cb.iteration) {
      // One side stopped earlier: its partition stabilised with a different
      // class structure. Report the sizes at the shorter side's last round.
      Certificate cert{t, 0, count_classes(ca.colors), count_classes(cb.colors)};
      return cert;
    }
    auto ha = histogram(ca.colors);
    auto hb = histogram(cb.colors);
    if (ha == hb) continue;
    for (const auto& [color, count] : ha) {
      auto it = hb.find(color);
      std::size_t other = it == hb.end() ? 0 : it->second;
      if (other != count) return Certificate{t, color, count, other};
    }
    for (const auto& [color, count] : hb) {
      if (!ha.contains(color)) return Certificate{t, color, 0, count};
    }
  }
  return std::nullopt;
}

}  // namespace

const Verdict* DiscriminationReport::find(AlgorithmKind kind) const {
  for (const auto& v : verdicts)
    if (v.algorithm.kind == kind) return &v;
  return nullptr;
}

DiscriminationReport discriminate(const Graph& g1, const Graph& g2, const std::vector<AlgorithmSpec>& suite,
                                  GraphId id1, GraphId id2) {
  if (suite.empty()) fail(ErrorKind::contract, "discriminate needs a non-empty suite");
  DiscriminationReport report{std::move(id1), std::move(id2), {}};
  for (const auto& spec : suite) {
    auto r1 = run(g1, spec);
    auto r2 = run(g2, spec);
    Verdict v;
    v.algorithm = spec;
    v.first = r1.fingerprint;
    v.second = r2.fingerprint;
    v.distinguished = !(r1.fingerprint == r2.fingerprint);
    if (v.distinguished) v.certificate = certify(r1, r2);
    report.verdicts.push_back(std::move(v));
  }
  return report;
}

bool dominance_consistent(const DiscriminationReport& report) {
  for (const auto& strong : report.verdicts) {
    for (const auto& weak : report.verdicts) {
      const bool ordered =
          (strong.algorithm.kind == AlgorithmKind::khop && weak.algorithm.kind == AlgorithmKind::wl1) ||
          (strong.algorithm.kind == AlgorithmKind::sek &&
           (weak.algorithm.kind == AlgorithmKind::wl1 ||
            (weak.algorithm.kind == AlgorithmKind::khop && weak.algorithm.K == strong.algorithm.K)));
      if (ordered && weak.distinguished && !strong.distinguished) return false;
    }
  }
  return true;
}

std::uint32_t theorem1_radius(std::size_t n, std::size_t r, double epsilon) {
  if (r < 3) fail(ErrorKind::domain, "hop radius formula needs r >= 3");
  const double value =
      (0.5 + epsilon) * std::log(2.0 * static_cast<double>(n)) / std::log(static_cast<double>(r) - 1.0) + 1.0;
  return static_cast<std::uint32_t>(std::ceil(value));
}

bool self_return_separated(const Graph& g1, NodeId u, const Graph& g2, NodeId v, std::size_t steps, double* gap) {
  auto a = self_return_vector(g1, u, steps);
  auto b = self_return_vector(g2, v, steps);
  double worst = 0.0;
  for (std::size_t t = 0; t < steps; ++t) worst = std::max(worst, std::abs(a[t] - b[t]));
  if (gap) *gap = worst;
  return worst > kSelfReturnTolerance;
}

Theorem1Result theorem1_experiment(std::size_t n, std::size_t r, double epsilon, std::size_t trials,
                                   std::uint64_t seed) {
  if (r < 3 || static_cast<double>(r) >= std::sqrt(2.0 * std::log(2.0 * static_cast<double>(n)))) {
    fail(ErrorKind::domain, "self-return experiment needs 3 <= r < sqrt(2 ln 2n)");
  }
  if ((n * r) % 2 != 0) fail(ErrorKind::domain, "n*r must be even");
  if (!(epsilon > 0.0)) fail(ErrorKind::domain, "epsilon must be positive");

  const std::uint32_t K = theorem1_radius(n, r, epsilon);
  Theorem1Result result;
  result.trials.resize(trials);
  parallel_for(trials, [&](std::size_t i) {
    Theorem1Trial t;
    t.index = i;
    t.n = n;
    t.r = r;
    t.epsilon = epsilon;
    t.K_used = K;
    t.seed_first = derive_seed(seed, 1, i);
    t.seed_second = derive_seed(seed, 2, i);
    Graph g1 = random_regular(n, r, t.seed_first);
    Graph g2 = random_regular(n, r, t.seed_second);
    Rng roots(derive_seed(seed, 3, i));
    t.root_first = static_cast<NodeId>(roots.below(n));
    t.root_second = static_cast<NodeId>(roots.below(n));
    for (std::uint32_t k = 0; k < K; ++k) {
      auto c1 = edge_configuration(g1, t.root_first, k);
      auto c2 = edge_configuration(g2, t.root_second, k);
      if (!(c1 == c2)) {
        t.edge_config_differs_at = k;
        t.collision = c1.weighted_total() == c2.weighted_total();
        break;
      }
    }
    t.self_return_separated = self_return_separated(g1, t.root_first, g2, t.root_second, 2 * K, &t.max_gap);
    result.trials[i] = t;
  });

  auto& s = result.summary;
  s.trials = trials;
  for (const auto& t : result.trials) {
    if (!t.edge_config_differs_at) continue;
    ++s.config_differing;
    s.separated_among_differing += t.self_return_separated ? 1 : 0;
    s.collisions += t.collision ? 1 : 0;
  }
  if (s.config_differing > 0) {
    s.separation_rate = static_cast<double>(s.separated_among_differing) / static_cast<double>(s.config_differing);
    s.collision_rate = static_cast<double>(s.collisions) / static_cast<double>(s.config_differing);
  }
  return result;
}

CountingSeparation counting_separation_check(const std::vector<Graph>& corpus, const AlgorithmSpec& sek) {
  CountingSeparation out;
  out.graphs = corpus.size();
  out.counts.resize(corpus.size());
  std::vector<GraphFingerprint> prints(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    out.counts[i] = count_substructures(corpus[i], CountMethod::closed_form);
    prints[i] = run(corpus[i], sek).fingerprint;
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      if (out.counts[i] == out.counts[j]) continue;
      ++out.pairs_with_unequal_counts;
      out.separated += prints[i] == prints[j] ? 0 : 1;
    }
  }
  if (out.pairs_with_unequal_counts > 0) {
    out.rate = static_cast<double>(out.separated) / static_cast<double>(out.pairs_with_unequal_counts);
  }
  return out;
}

}  // namespace sekwl
