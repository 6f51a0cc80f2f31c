#include "sekwl/sekwl.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/counting.hpp"
#include "core/ego.hpp"
#include "core/error.hpp"
#include "core/generators.hpp"
#include "core/graph_io.hpp"
#include "core/harness.hpp"
#include "core/parallel.hpp"
#include "core/random_walk.hpp"
#include "core/refine.hpp"
#include "core/report.hpp"
#include "core/sek_forward.hpp"

struct sekwl_graph {
  sekwl::Graph graph;
};

struct sekwl_refinement {
  sekwl::AlgorithmSpec spec;
  sekwl::RefinementResult result;
};

struct sekwl_discrimination {
  sekwl::DiscriminationReport report;
  std::vector<std::string> names;
};

struct sekwl_theorem1 {
  sekwl::Theorem1Result result;
};

namespace {

thread_local std::string t_last_error;

sekwl_status status_of(sekwl::ErrorKind kind) {
  switch (kind) {
    case sekwl::ErrorKind::parse:
      return SEKWL_ERR_PARSE;
    case sekwl::ErrorKind::format:
      return SEKWL_ERR_FORMAT;
    case sekwl::ErrorKind::domain:
      return SEKWL_ERR_DOMAIN;
    case sekwl::ErrorKind::capability:
      return SEKWL_ERR_CAPABILITY;
    case sekwl::ErrorKind::contract:
      return SEKWL_ERR_CONTRACT;
    case sekwl::ErrorKind::io:
      return SEKWL_ERR_IO;
    case sekwl::ErrorKind::usage:
      return SEKWL_ERR_USAGE;
  }
  return SEKWL_ERR_INTERNAL;
}

template <class Body>
sekwl_status guarded(Body&& body) {
  try {
    body();
    return SEKWL_OK;
  } catch (const sekwl::Error& e) {
    t_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return SEKWL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return SEKWL_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) sekwl::fail(sekwl::ErrorKind::contract, std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

sekwl::EncodingSpec to_spec(const sekwl_encoding* enc) {
  require(enc, "encoding");
  sekwl::EncodingSpec e;
  e.steps = enc->steps;
  e.radius = enc->radius;
  e.agg = enc->agg == SEKWL_AGG_SUM ? sekwl::Aggregation::sum : sekwl::Aggregation::mean;
  e.domain = enc->domain == SEKWL_WALK_EGO ? sekwl::WalkDomain::ego : sekwl::WalkDomain::graph;
  return e;
}

sekwl::GraphFormat to_format(const char* path, const char* format) {
  if (!format) return sekwl::format_from_path(path);
  std::string f(format);
  if (f == "g6" || f == "graph6") return sekwl::GraphFormat::graph6;
  if (f == "el" || f == "edgelist") return sekwl::GraphFormat::edge_list;
  sekwl::fail(sekwl::ErrorKind::usage, "unknown graph format '" + f + "' (expected el or g6)");
}

void check_node(const sekwl_graph* g, uint32_t u) {
  require(g, "graph");
  if (u >= g->graph.node_count()) sekwl::fail(sekwl::ErrorKind::contract, "node id out of range");
}

}  // namespace

extern "C" {

const char* sekwl_version(void) { return "1.0.0"; }

const char* sekwl_last_error(void) { return t_last_error.c_str(); }

void sekwl_string_free(char* s) { std::free(s); }

void sekwl_set_threads(size_t threads) { sekwl::set_thread_count(threads); }

uint64_t sekwl_derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
  return sekwl::derive_seed(master, stream, index);
}

void sekwl_default_encoding(sekwl_encoding* out) {
  if (!out) return;
  auto e = sekwl::default_refinement_encoding();
  out->steps = e.steps;
  out->radius = e.radius;
  out->agg = SEKWL_AGG_MEAN;
  out->domain = SEKWL_WALK_EGO;
}

sekwl_status sekwl_graph_from_edges(size_t n, const uint32_t* pairs, size_t edge_count, sekwl_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (edge_count) require(pairs, "pairs");
    std::vector<sekwl::Edge> edges;
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    *out = new sekwl_graph{sekwl::Graph::from_edges(n, edges)};
  });
}

sekwl_status sekwl_graph_parse_edge_list(const char* text, size_t len, sekwl_graph** out, size_t* duplicates,
                                         size_t* self_loops) {
  return guarded([&] {
    require(out, "out");
    if (len) require(text, "text");
    auto load = sekwl::from_edge_list(std::string_view(text ? text : "", len));
    if (duplicates) *duplicates = load.duplicates;
    if (self_loops) *self_loops = load.self_loops;
    *out = new sekwl_graph{std::move(load.graph)};
  });
}

sekwl_status sekwl_graph6_record_count(const char* bytes, size_t len, size_t* count) {
  return guarded([&] {
    require(count, "count");
    *count = sekwl::from_graph6(std::string_view(bytes ? bytes : "", len)).size();
  });
}

sekwl_status sekwl_graph_parse_graph6(const char* bytes, size_t len, size_t index, sekwl_graph** out) {
  return guarded([&] {
    require(out, "out");
    auto graphs = sekwl::from_graph6(std::string_view(bytes ? bytes : "", len));
    if (index >= graphs.size()) sekwl::fail(sekwl::ErrorKind::contract, "graph6 record index out of range");
    *out = new sekwl_graph{std::move(graphs[index])};
  });
}

sekwl_status sekwl_graph_load(const char* path, const char* format, sekwl_graph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto graphs = sekwl::load_graphs(path, to_format(path, format));
    if (graphs.empty()) sekwl::fail(sekwl::ErrorKind::format, std::string(path) + ": no graph records");
    *out = new sekwl_graph{std::move(graphs.front())};
  });
}

sekwl_status sekwl_graph_save(const sekwl_graph* g, const char* path, const char* format) {
  return guarded([&] {
    require(g, "graph");
    require(path, "path");
    sekwl::save_graph(path, g->graph, to_format(path, format));
  });
}

sekwl_status sekwl_graph_generate(const char* spec, uint64_t default_seed, sekwl_graph** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new sekwl_graph{sekwl::generate(spec, default_seed)};
  });
}

const char* sekwl_generator_grammar(void) { return sekwl::kGeneratorGrammar; }

sekwl_status sekwl_graph_permute(const sekwl_graph* g, const uint32_t* perm, sekwl_graph** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const size_t n = g->graph.node_count();
    if (n) require(perm, "perm");
    std::vector<sekwl::NodeId> p(perm, perm + n);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < n; ++i) {
      if (sorted[i] != i) sekwl::fail(sekwl::ErrorKind::contract, "perm is not a permutation of 0..n-1");
    }
    *out = new sekwl_graph{g->graph.permuted(p)};
  });
}

void sekwl_graph_free(sekwl_graph* g) { delete g; }

size_t sekwl_graph_node_count(const sekwl_graph* g) { return g ? g->graph.node_count() : 0; }

size_t sekwl_graph_edge_count(const sekwl_graph* g) { return g ? g->graph.edge_count() : 0; }

sekwl_status sekwl_graph_neighbors(const sekwl_graph* g, uint32_t u, const uint32_t** neighbors, size_t* count) {
  return guarded([&] {
    check_node(g, u);
    require(neighbors, "neighbors");
    require(count, "count");
    auto nb = g->graph.neighbors(u);
    *neighbors = nb.data();
    *count = nb.size();
  });
}

sekwl_status sekwl_graph_to_graph6(const sekwl_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(sekwl::to_graph6(g->graph));
  });
}

sekwl_status sekwl_graph_to_edge_list(const sekwl_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup_string(sekwl::to_edge_list(g->graph));
  });
}

sekwl_status sekwl_edge_configuration(const sekwl_graph* g, uint32_t u, uint32_t k, size_t* counts, size_t cap,
                                      size_t* len) {
  return guarded([&] {
    check_node(g, u);
    require(len, "len");
    auto cfg = sekwl::edge_configuration(g->graph, u, k);
    *len = cfg.counts.size();
    if (cap) require(counts, "counts");
    for (size_t i = 0; i < std::min(cap, cfg.counts.size()); ++i) counts[i] = cfg.counts[i];
  });
}

sekwl_status sekwl_intersection_array(const sekwl_graph* g, int* distance_regular, char** text) {
  return guarded([&] {
    require(g, "graph");
    require(distance_regular, "distance_regular");
    require(text, "text");
    auto ia = sekwl::intersection_array(g->graph);
    *distance_regular = ia ? 1 : 0;
    *text = ia ? dup_string(sekwl::to_string(*ia)) : nullptr;
  });
}

sekwl_status sekwl_landing_prob_row(const sekwl_graph* g, uint32_t u, size_t t, double* out) {
  return guarded([&] {
    check_node(g, u);
    require(out, "out");
    auto row = sekwl::landing_prob_row(g->graph, u, t);
    std::copy(row.probs.begin(), row.probs.end(), out);
  });
}

sekwl_status sekwl_self_return_vector(const sekwl_graph* g, uint32_t u, size_t l, double* out) {
  return guarded([&] {
    check_node(g, u);
    if (l) require(out, "out");
    auto v = sekwl::self_return_vector(g->graph, u, l);
    std::copy(v.begin(), v.end(), out);
  });
}

size_t sekwl_encoding_width(const sekwl_encoding* enc) { return enc ? enc->steps + 2 * enc->radius * enc->steps : 0; }

sekwl_status sekwl_encode_graph(const sekwl_graph* g, const sekwl_encoding* enc, double* out, size_t cap) {
  return guarded([&] {
    require(g, "graph");
    auto spec = to_spec(enc);
    const size_t width = spec.width();
    if (cap < width * g->graph.node_count()) sekwl::fail(sekwl::ErrorKind::contract, "output buffer too small");
    auto feats = sekwl::encode_graph(g->graph, spec);
    for (size_t v = 0; v < feats.size(); ++v) {
      auto row = feats[v].combined();
      std::copy(row.begin(), row.end(), out + v * width);
    }
  });
}

sekwl_status sekwl_encode_graph_csv(const sekwl_graph* g, const sekwl_encoding* enc, char** csv) {
  return guarded([&] {
    require(g, "graph");
    require(csv, "csv");
    auto spec = to_spec(enc);
    *csv = dup_string(sekwl::features_to_csv(sekwl::encode_graph(g->graph, spec), spec));
  });
}

const char* sekwl_algorithm_grammar(void) { return sekwl::kAlgorithmGrammar; }

sekwl_status sekwl_refine(const sekwl_graph* g, const char* algorithm, size_t default_T, sekwl_refinement** out) {
  return guarded([&] {
    require(g, "graph");
    require(algorithm, "algorithm");
    require(out, "out");
    auto spec = sekwl::parse_algorithm(algorithm, default_T);
    *out = new sekwl_refinement{spec, sekwl::run(g->graph, spec)};
  });
}

void sekwl_refinement_free(sekwl_refinement* r) { delete r; }

uint64_t sekwl_refinement_fingerprint(const sekwl_refinement* r) { return r ? r->result.fingerprint.value : 0; }

size_t sekwl_refinement_rounds(const sekwl_refinement* r) { return r ? r->result.history.size() : 0; }

size_t sekwl_refinement_stable_at(const sekwl_refinement* r) { return r ? r->result.stable_at : 0; }

sekwl_status sekwl_refinement_colors(const sekwl_refinement* r, size_t round, const uint64_t** colors) {
  return guarded([&] {
    require(r, "refinement");
    require(colors, "colors");
    if (round >= r->result.history.size()) sekwl::fail(sekwl::ErrorKind::contract, "round out of range");
    *colors = r->result.history[round].colors.data();
  });
}

sekwl_status sekwl_refinement_trace_json(const sekwl_refinement* r, char** json) {
  return guarded([&] {
    require(r, "refinement");
    require(json, "json");
    *json = dup_string(sekwl::to_json(r->result, r->spec).dump());
  });
}

sekwl_status sekwl_discriminate(const sekwl_graph* g1, const sekwl_graph* g2, const char* suite, size_t default_T,
                                const char* label1, const char* label2, sekwl_discrimination** out) {
  return guarded([&] {
    require(g1, "g1");
    require(g2, "g2");
    require(suite, "suite");
    require(out, "out");
    auto specs = sekwl::parse_suite(suite, default_T);
    auto report = sekwl::discriminate(g1->graph, g2->graph, specs, {label1 ? label1 : "g1", ""},
                                      {label2 ? label2 : "g2", ""});
    auto* d = new sekwl_discrimination{std::move(report), {}};
    for (const auto& v : d->report.verdicts) d->names.push_back(v.algorithm.to_string());
    *out = d;
  });
}

void sekwl_discrimination_free(sekwl_discrimination* d) { delete d; }

size_t sekwl_discrimination_size(const sekwl_discrimination* d) { return d ? d->report.verdicts.size() : 0; }

sekwl_status sekwl_discrimination_verdict(const sekwl_discrimination* d, size_t i, const char** algorithm,
                                          int* distinguished) {
  return guarded([&] {
    require(d, "discrimination");
    if (i >= d->report.verdicts.size()) sekwl::fail(sekwl::ErrorKind::contract, "verdict index out of range");
    if (algorithm) *algorithm = d->names[i].c_str();
    if (distinguished) *distinguished = d->report.verdicts[i].distinguished ? 1 : 0;
  });
}

sekwl_status sekwl_discrimination_json(const sekwl_discrimination* d, char** json) {
  return guarded([&] {
    require(d, "discrimination");
    require(json, "json");
    *json = dup_string(sekwl::to_json(d->report).dump());
  });
}

sekwl_status sekwl_count_substructures(const sekwl_graph* g, sekwl_count_method method, sekwl_counts* out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    auto c = sekwl::count_substructures(
        g->graph, method == SEKWL_COUNT_ENUMERATE ? sekwl::CountMethod::enumerate : sekwl::CountMethod::closed_form);
    *out = {c.triangles, c.tailed_triangles, c.three_stars, c.four_cycles};
  });
}

uint32_t sekwl_theorem1_radius(size_t n, size_t r, double epsilon) {
  if (r < 3) return 0;
  return sekwl::theorem1_radius(n, r, epsilon);
}

sekwl_status sekwl_theorem1_run(size_t n, size_t r, double epsilon, size_t trials, uint64_t seed,
                                sekwl_theorem1** out) {
  return guarded([&] {
    require(out, "out");
    *out = new sekwl_theorem1{sekwl::theorem1_experiment(n, r, epsilon, trials, seed)};
  });
}

void sekwl_theorem1_free(sekwl_theorem1* t) { delete t; }

sekwl_status sekwl_theorem1_summary_get(const sekwl_theorem1* t, sekwl_theorem1_summary* out) {
  return guarded([&] {
    require(t, "theorem1");
    require(out, "out");
    const auto& s = t->result.summary;
    *out = {s.trials,          s.config_differing, s.separated_among_differing, s.collisions,
            s.separation_rate, s.collision_rate,   t->result.trials.empty() ? 0u : t->result.trials[0].K_used};
  });
}

sekwl_status sekwl_theorem1_jsonl(const sekwl_theorem1* t, char** jsonl) {
  return guarded([&] {
    require(t, "theorem1");
    require(jsonl, "jsonl");
    std::string out;
    for (const auto& trial : t->result.trials) out += sekwl::to_json(trial).dump() + "\n";
    *jsonl = dup_string(out);
  });
}

sekwl_status sekwl_theorem1_summary_json(const sekwl_theorem1* t, char** json) {
  return guarded([&] {
    require(t, "theorem1");
    require(json, "json");
    auto j = sekwl::to_json(t->result.summary);
    j["K_used"] = t->result.trials.empty() ? 0u : t->result.trials[0].K_used;
    *json = dup_string(j.dump());
  });
}

sekwl_status sekwl_counting_separation(const sekwl_graph* const* corpus, size_t count, const char* sek,
                                       size_t default_T, char** json, double* rate) {
  return guarded([&] {
    if (count) require(corpus, "corpus");
    require(sek, "sek");
    std::vector<sekwl::Graph> graphs;
    for (size_t i = 0; i < count; ++i) {
      require(corpus[i], "corpus entry");
      graphs.push_back(corpus[i]->graph);
    }
    auto spec = sekwl::parse_algorithm(sek, default_T);
    auto result = sekwl::counting_separation_check(graphs, spec);
    if (rate) *rate = result.rate;
    if (json) {
      auto j = sekwl::to_json(result);
      j["algorithm"] = spec.to_string();
      *json = dup_string(j.dump());
    }
  });
}

void sekwl_default_forward_config(sekwl_forward_config* out) {
  if (!out) return;
  *out = {2, 2, 4, SEKWL_COMBINE_SUM, 0.5, 0, 0, 0, SEKWL_JK_CONCAT};
}

sekwl_status sekwl_forward_readout(const sekwl_graph* g, const sekwl_encoding* enc, const sekwl_forward_config* cfg,
                                   double* out, size_t cap, size_t* len) {
  return guarded([&] {
    require(g, "graph");
    require(cfg, "config");
    require(len, "len");
    if (cfg->layers < 1) sekwl::fail(sekwl::ErrorKind::contract, "forward needs at least one layer");
    auto feats = sekwl::encode_graph(g->graph, to_spec(enc));
    sekwl::CombineSpec combine;
    combine.mode = cfg->combine == SEKWL_COMBINE_GEOMETRIC ? sekwl::CombineMode::geometric : sekwl::CombineMode::sum;
    combine.alpha = cfg->alpha;
    combine.normalize = cfg->normalize != 0;
    std::optional<sekwl::SamplerSpec> sampler;
    if (cfg->sampler_cap > 0) sampler = sekwl::SamplerSpec{cfg->sampler_cap, cfg->seed};
    auto histories = sekwl::forward(g->graph, feats, cfg->K, cfg->layers, cfg->width, combine, sampler);
    auto vec = sekwl::jk_readout(histories, cfg->pool == SEKWL_JK_SUM ? sekwl::JkPool::sum : sekwl::JkPool::concat);
    *len = vec.size();
    if (cap) require(out, "out");
    std::copy(vec.begin(), vec.begin() + static_cast<std::ptrdiff_t>(std::min(cap, vec.size())), out);
  });
}

}  // extern "C"
