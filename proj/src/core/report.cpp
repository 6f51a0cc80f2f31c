#include "core/report.hpp"

#include <cstdio>

namespace sekwl {

using nlohmann::json;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json to_json(const EncodingSpec& e) {
  return {{"l", e.steps}, {"K", e.radius}, {"agg", to_string(e.agg)}, {"walk", to_string(e.domain)}};
}

json to_json(const SubstructureCounts& c) {
  return {{"triangles", c.triangles},
          {"tailed_triangles", c.tailed_triangles},
          {"three_stars", c.three_stars},
          {"four_cycles", c.four_cycles}};
}

json to_json(const RefinementResult& r, const AlgorithmSpec& spec) {
  json params = {{"T", spec.T}};
  if (spec.kind != AlgorithmKind::wl1) params["K"] = spec.K;
  if (spec.kind == AlgorithmKind::subgraph)
    params["variant"] = spec.variant == SubgraphVariant::nested ? "nested" : "eq5";
  if (spec.kind == AlgorithmKind::sek ||
      (spec.kind == AlgorithmKind::subgraph && spec.variant == SubgraphVariant::eq5))
    params["encoding"] = to_json(spec.encoding);
  static constexpr const char* kNames[] = {"wl1", "khop", "subgraph", "sek"};
  return {{"algorithm", kNames[static_cast<int>(spec.kind)]},
          {"spec", spec.to_string()},
          {"params", params},
          {"partition_sizes", r.partition_sizes()},
          {"stable_at", r.stable_at},
          {"stabilized", r.stabilized},
          {"fingerprint", hex64(r.fingerprint.value)},
          {"n", r.fingerprint.n}};
}

json to_json(const DiscriminationReport& report) {
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    json entry = {{"algorithm", v.algorithm.to_string()},
                  {"verdict", v.distinguished ? "distinguished" : "not_distinguished"},
                  {"fingerprints", {hex64(v.first.value), hex64(v.second.value)}}};
    if (v.certificate) {
      entry["certificate"] = {{"iteration", v.certificate->iteration},
                              {"witness_color", hex64(v.certificate->witness)},
                              {"class_sizes", {v.certificate->count_first, v.certificate->count_second}}};
    }
    verdicts.push_back(std::move(entry));
  }
  return {{"pair",
           {{{"label", report.first.label}, {"source", report.first.source}},
            {{"label", report.second.label}, {"source", report.second.source}}}},
          {"verdicts", verdicts},
          {"dominance_consistent", dominance_consistent(report)}};
}

json to_json(const Theorem1Trial& t) {
  json j = {{"trial", t.index},
            {"n", t.n},
            {"r", t.r},
            {"epsilon", t.epsilon},
            {"seeds", {hex64(t.seed_first), hex64(t.seed_second)}},
            {"roots", {t.root_first, t.root_second}},
            {"K_used", t.K_used},
            {"edge_config_differs_at", nullptr},
            {"collision", t.collision},
            {"max_gap", t.max_gap},
            {"self_return_separated", t.self_return_separated}};
  if (t.edge_config_differs_at) j["edge_config_differs_at"] = *t.edge_config_differs_at;
  return j;
}

json to_json(const Theorem1Summary& s) {
  return {{"trials", s.trials},
          {"config_differing", s.config_differing},
          {"separated_among_differing", s.separated_among_differing},
          {"separation_rate", s.separation_rate},
          {"collisions", s.collisions},
          {"collision_rate", s.collision_rate}};
}

json to_json(const CountingSeparation& s) {
  json counts = json::array();
  for (const auto& c : s.counts) counts.push_back(to_json(c));
  return {{"graphs", s.graphs},
          {"pairs_with_unequal_counts", s.pairs_with_unequal_counts},
          {"separated", s.separated},
          {"rate", s.rate},
          {"counts", counts}};
}

}  // namespace sekwl
