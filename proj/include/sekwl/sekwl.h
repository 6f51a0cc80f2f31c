/*
 * sekwl: substructure-enhanced K-hop colour refinement.
 *
 * C interface over the C++ core. Objects are opaque handles released with
 * the matching *_free function. Every fallible call returns a sekwl_status;
 * on failure sekwl_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Strings returned through
 * char** out-params are heap-allocated and released with sekwl_string_free.
 */
#ifndef SEKWL_H
#define SEKWL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SEKWL_BUILDING_LIBRARY)
#    define SEKWL_API __declspec(dllexport)
#  else
#    define SEKWL_API __declspec(dllimport)
#  endif
#else
#  define SEKWL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sekwl_status {
  SEKWL_OK = 0,
  SEKWL_ERR_PARSE = 1,      /* malformed edge-list text */
  SEKWL_ERR_FORMAT = 2,     /* malformed graph6 record */
  SEKWL_ERR_DOMAIN = 3,     /* infeasible parameters, disconnected input, ... */
  SEKWL_ERR_CAPABILITY = 4, /* input beyond a supported size */
  SEKWL_ERR_CONTRACT = 5,   /* precondition violated by the caller */
  SEKWL_ERR_IO = 6,
  SEKWL_ERR_USAGE = 7,      /* bad generator / algorithm spec string */
  SEKWL_ERR_INTERNAL = 8
} sekwl_status;

typedef enum sekwl_aggregation { SEKWL_AGG_MEAN = 0, SEKWL_AGG_SUM = 1 } sekwl_aggregation;
typedef enum sekwl_walk_domain { SEKWL_WALK_GRAPH = 0, SEKWL_WALK_EGO = 1 } sekwl_walk_domain;
typedef enum sekwl_count_method { SEKWL_COUNT_CLOSED_FORM = 0, SEKWL_COUNT_ENUMERATE = 1 } sekwl_count_method;
typedef enum sekwl_combine_mode { SEKWL_COMBINE_SUM = 0, SEKWL_COMBINE_GEOMETRIC = 1 } sekwl_combine_mode;
typedef enum sekwl_jk_pool { SEKWL_JK_SUM = 0, SEKWL_JK_CONCAT = 1 } sekwl_jk_pool;

typedef struct sekwl_graph sekwl_graph;
typedef struct sekwl_refinement sekwl_refinement;
typedef struct sekwl_discrimination sekwl_discrimination;
typedef struct sekwl_theorem1 sekwl_theorem1;

typedef struct sekwl_encoding {
  size_t steps;     /* l >= 1 */
  uint32_t radius;  /* K >= 1 */
  sekwl_aggregation agg;
  sekwl_walk_domain domain;
} sekwl_encoding;

typedef struct sekwl_counts {
  uint64_t triangles;
  uint64_t tailed_triangles;
  uint64_t three_stars;
  uint64_t four_cycles;
} sekwl_counts;

typedef struct sekwl_forward_config {
  uint32_t K;
  size_t layers;
  size_t width;            /* initial hidden width; states start at 1.0 */
  sekwl_combine_mode combine;
  double alpha;
  int normalize;
  size_t sampler_cap;      /* 0 disables neighbour sampling */
  uint64_t seed;
  sekwl_jk_pool pool;
} sekwl_forward_config;

typedef struct sekwl_theorem1_summary {
  size_t trials;
  size_t config_differing;
  size_t separated_among_differing;
  size_t collisions;
  double separation_rate;
  double collision_rate;
  uint32_t K_used;
} sekwl_theorem1_summary;

/* ---- library ---------------------------------------------------------- */

SEKWL_API const char* sekwl_version(void);
SEKWL_API const char* sekwl_last_error(void);
SEKWL_API void sekwl_string_free(char* s);
/* Caps worker threads; 0 selects hardware concurrency. Results never depend
 * on this setting. */
SEKWL_API void sekwl_set_threads(size_t threads);
SEKWL_API uint64_t sekwl_derive_seed(uint64_t master, uint64_t stream, uint64_t index);
SEKWL_API void sekwl_default_encoding(sekwl_encoding* out);

/* ---- graphs ----------------------------------------------------------- */

/* `pairs` holds edge_count (u, v) pairs, 2*edge_count values. */
SEKWL_API sekwl_status sekwl_graph_from_edges(size_t n, const uint32_t* pairs, size_t edge_count,
                                              sekwl_graph** out);
SEKWL_API sekwl_status sekwl_graph_parse_edge_list(const char* text, size_t len, sekwl_graph** out,
                                                   size_t* duplicates, size_t* self_loops);
SEKWL_API sekwl_status sekwl_graph6_record_count(const char* bytes, size_t len, size_t* count);
SEKWL_API sekwl_status sekwl_graph_parse_graph6(const char* bytes, size_t len, size_t index, sekwl_graph** out);
/* format: "el", "g6" or NULL to infer from the extension. Loads the first
 * graph of the file. */
SEKWL_API sekwl_status sekwl_graph_load(const char* path, const char* format, sekwl_graph** out);
SEKWL_API sekwl_status sekwl_graph_save(const sekwl_graph* g, const char* path, const char* format);
SEKWL_API sekwl_status sekwl_graph_generate(const char* spec, uint64_t default_seed, sekwl_graph** out);
SEKWL_API const char* sekwl_generator_grammar(void);
/* Node u becomes perm[u]. */
SEKWL_API sekwl_status sekwl_graph_permute(const sekwl_graph* g, const uint32_t* perm, sekwl_graph** out);
SEKWL_API void sekwl_graph_free(sekwl_graph* g);

SEKWL_API size_t sekwl_graph_node_count(const sekwl_graph* g);
SEKWL_API size_t sekwl_graph_edge_count(const sekwl_graph* g);
SEKWL_API sekwl_status sekwl_graph_neighbors(const sekwl_graph* g, uint32_t u, const uint32_t** neighbors,
                                             size_t* count);
SEKWL_API sekwl_status sekwl_graph_to_graph6(const sekwl_graph* g, char** out);
SEKWL_API sekwl_status sekwl_graph_to_edge_list(const sekwl_graph* g, char** out);

/* ---- ego-network analysis --------------------------------------------- */

/* Writes a^1.. into counts (capacity cap); *len receives the full length. */
SEKWL_API sekwl_status sekwl_edge_configuration(const sekwl_graph* g, uint32_t u, uint32_t k, size_t* counts,
                                                size_t cap, size_t* len);
/* *text receives "{b0,..;c1,..}" or NULL when not distance-regular. */
SEKWL_API sekwl_status sekwl_intersection_array(const sekwl_graph* g, int* distance_regular, char** text);

/* ---- random walks and encoding ---------------------------------------- */

/* out must hold node_count values. */
SEKWL_API sekwl_status sekwl_landing_prob_row(const sekwl_graph* g, uint32_t u, size_t t, double* out);
/* out must hold l values. */
SEKWL_API sekwl_status sekwl_self_return_vector(const sekwl_graph* g, uint32_t u, size_t l, double* out);
SEKWL_API size_t sekwl_encoding_width(const sekwl_encoding* enc);
/* Row-major node_count x width matrix of f1 | f2 | f3. */
SEKWL_API sekwl_status sekwl_encode_graph(const sekwl_graph* g, const sekwl_encoding* enc, double* out, size_t cap);
SEKWL_API sekwl_status sekwl_encode_graph_csv(const sekwl_graph* g, const sekwl_encoding* enc, char** csv);

/* ---- colour refinement ------------------------------------------------ */

SEKWL_API const char* sekwl_algorithm_grammar(void);
/* algorithm: e.g. "wl1", "khop:K=2", "subgraph:K=2,variant=nested",
 * "sek:K=2,l=6". default_T applies when the spec has no T=. */
SEKWL_API sekwl_status sekwl_refine(const sekwl_graph* g, const char* algorithm, size_t default_T,
                                    sekwl_refinement** out);
SEKWL_API void sekwl_refinement_free(sekwl_refinement* r);
SEKWL_API uint64_t sekwl_refinement_fingerprint(const sekwl_refinement* r);
SEKWL_API size_t sekwl_refinement_rounds(const sekwl_refinement* r);
SEKWL_API size_t sekwl_refinement_stable_at(const sekwl_refinement* r);
/* Colours after `round` (node_count values, owned by the handle). */
SEKWL_API sekwl_status sekwl_refinement_colors(const sekwl_refinement* r, size_t round, const uint64_t** colors);
SEKWL_API sekwl_status sekwl_refinement_trace_json(const sekwl_refinement* r, char** json);

SEKWL_API sekwl_status sekwl_discriminate(const sekwl_graph* g1, const sekwl_graph* g2, const char* suite,
                                          size_t default_T, const char* label1, const char* label2,
                                          sekwl_discrimination** out);
SEKWL_API void sekwl_discrimination_free(sekwl_discrimination* d);
SEKWL_API size_t sekwl_discrimination_size(const sekwl_discrimination* d);
/* *algorithm is owned by the handle. */
SEKWL_API sekwl_status sekwl_discrimination_verdict(const sekwl_discrimination* d, size_t i, const char** algorithm,
                                                    int* distinguished);
SEKWL_API sekwl_status sekwl_discrimination_json(const sekwl_discrimination* d, char** json);

/* ---- harness ---------------------------------------------------------- */

SEKWL_API sekwl_status sekwl_count_substructures(const sekwl_graph* g, sekwl_count_method method, sekwl_counts* out);

SEKWL_API uint32_t sekwl_theorem1_radius(size_t n, size_t r, double epsilon);
SEKWL_API sekwl_status sekwl_theorem1_run(size_t n, size_t r, double epsilon, size_t trials, uint64_t seed,
                                          sekwl_theorem1** out);
SEKWL_API void sekwl_theorem1_free(sekwl_theorem1* t);
SEKWL_API sekwl_status sekwl_theorem1_summary_get(const sekwl_theorem1* t, sekwl_theorem1_summary* out);
/* One JSON object per line, one line per trial. */
SEKWL_API sekwl_status sekwl_theorem1_jsonl(const sekwl_theorem1* t, char** jsonl);
SEKWL_API sekwl_status sekwl_theorem1_summary_json(const sekwl_theorem1* t, char** json);

/* Separation rate of the sek algorithm over pairs with unequal counts. */
SEKWL_API sekwl_status sekwl_counting_separation(const sekwl_graph* const* corpus, size_t count, const char* sek,
                                                 size_t default_T, char** json, double* rate);

/* ---- SEK message passing (forward only) ------------------------------- */

SEKWL_API void sekwl_default_forward_config(sekwl_forward_config* out);
/* Runs cfg->layers parameter-free layers and writes the jumping-knowledge
 * graph vector; *len receives its full length. */
SEKWL_API sekwl_status sekwl_forward_readout(const sekwl_graph* g, const sekwl_encoding* enc,
                                             const sekwl_forward_config* cfg, double* out, size_t cap, size_t* len);

#ifdef __cplusplus
}
#endif

#endif /* SEKWL_H */
