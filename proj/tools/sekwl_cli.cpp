// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sekwl/sekwl.h"

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

/// Failure carrying the process exit code.
struct CliError {
  int code;
  std::string message;
};

int exit_code_for(sekwl_status s) { return s == SEKWL_ERR_USAGE ? 2 : 1; }

void check(sekwl_status s, const std::string& context = {}) {
  if (s == SEKWL_OK) return;
  std::string msg = sekwl_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw CliError{exit_code_for(s), msg};
}

struct GraphDeleter {
  void operator()(sekwl_graph* g) const { sekwl_graph_free(g); }
};
using GraphPtr = std::unique_ptr<sekwl_graph, GraphDeleter>;

struct CString {
  char* p = nullptr;
  ~CString() { sekwl_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

const char* format_arg(const std::string& f) { return f.empty() ? nullptr : f.c_str(); }

GraphPtr load(const std::string& path, const std::string& format) {
  sekwl_graph* g = nullptr;
  check(sekwl_graph_load(path.c_str(), format_arg(format), &g), path);
  return GraphPtr(g);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw CliError{1, out + ": cannot open for writing"};
  f << text;
  if (!f) throw CliError{1, out + ": write failed"};
}

json graph_info(const std::string& path, const sekwl_graph* g) {
  return {{"path", path}, {"n", sekwl_graph_node_count(g)}, {"m", sekwl_graph_edge_count(g)}};
}

json report(const std::string& command, json config) {
  return {{"format_version", kFormatVersion}, {"command", command}, {"config", std::move(config)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

sekwl_encoding encoding_from(std::size_t l, std::uint32_t K, const std::string& agg, const std::string& walk) {
  sekwl_encoding e{};
  e.steps = l;
  e.radius = K;
  e.agg = agg == "sum" ? SEKWL_AGG_SUM : SEKWL_AGG_MEAN;
  e.domain = walk == "ego" ? SEKWL_WALK_EGO : SEKWL_WALK_GRAPH;
  return e;
}

json encoding_json(const sekwl_encoding& e) {
  return {{"K", e.radius},
          {"l", e.steps},
          {"agg", e.agg == SEKWL_AGG_SUM ? "sum" : "mean"},
          {"walk", e.domain == SEKWL_WALK_EGO ? "ego" : "graph"}};
}

struct Options {
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::string format;
  std::string out;

  // generate
  std::string spec;
  // graph inputs
  std::string graph;
  std::string graph2;
  std::vector<std::string> corpus;
  // encoding
  std::uint32_t K = 1;
  std::size_t l = 8;
  std::string agg = "mean";
  std::string walk = "graph";
  std::string forward_walk = "ego";
  // refinement
  std::string algo = "sek:K=2";
  std::string suite = "wl1,khop:K=2,sek:K=2";
  std::size_t T = 10;
  // count
  std::string method = "both";
  // theorem1
  std::size_t n = 100;
  std::size_t r = 3;
  double eps = 0.1;
  std::size_t trials = 100;
  std::string jsonl;
  // counting-separation
  std::size_t graphs = 50;
  std::size_t corpus_n = 12;
  double p = 0.3;
  // forward
  std::size_t layers = 2;
  std::size_t width = 4;
  std::string combine = "sum";
  double alpha = 0.5;
  bool normalize = false;
  std::size_t sample_cap = 0;
  std::string pool = "concat";
};

void cmd_generate(const Options& o) {
  sekwl_graph* raw = nullptr;
  check(sekwl_graph_generate(o.spec.c_str(), o.seed, &raw));
  GraphPtr g(raw);
  if (o.out.empty() || o.out == "-") {
    CString text;
    if (o.format == "g6") {
      check(sekwl_graph_to_graph6(g.get(), &text.p));
      emit(text.str() + "\n", "");
    } else {
      check(sekwl_graph_to_edge_list(g.get(), &text.p));
      emit(text.str(), "");
    }
    return;
  }
  check(sekwl_graph_save(g.get(), o.out.c_str(), format_arg(o.format)), o.out);
}

void cmd_encode(const Options& o) {
  auto g = load(o.graph, o.format);
  auto enc = encoding_from(o.l, o.K, o.agg, o.walk);
  CString csv;
  check(sekwl_encode_graph_csv(g.get(), &enc, &csv.p));
  emit(csv.str(), o.out);
  if (!o.out.empty() && o.out != "-") {
    json side = report("encode", encoding_json(enc));
    side["graph"] = graph_info(o.graph, g.get());
    side["columns"] = 1 + sekwl_encoding_width(&enc);
    side["csv"] = o.out;
    emit(dump(side), o.out + ".json");
  }
}

void cmd_refine(const Options& o) {
  auto g = load(o.graph, o.format);
  sekwl_refinement* r = nullptr;
  check(sekwl_refine(g.get(), o.algo.c_str(), o.T, &r));
  std::unique_ptr<sekwl_refinement, void (*)(sekwl_refinement*)> guard(r, sekwl_refinement_free);
  CString trace;
  check(sekwl_refinement_trace_json(r, &trace.p));
  json out = report("refine", {{"algo", o.algo}, {"T", o.T}});
  out["graph"] = graph_info(o.graph, g.get());
  out["result"] = json::parse(trace.str());
  const std::size_t rounds = sekwl_refinement_rounds(r);
  const uint64_t* colors = nullptr;
  check(sekwl_refinement_colors(r, rounds - 1, &colors));
  json final_colors = json::array();
  char buf[17];
  for (std::size_t v = 0; v < sekwl_graph_node_count(g.get()); ++v) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(colors[v]));
    final_colors.push_back(buf);
  }
  out["final_colors"] = final_colors;
  emit(dump(out), o.out);
}

void cmd_discriminate(const Options& o) {
  auto g1 = load(o.graph, o.format);
  auto g2 = load(o.graph2, o.format);
  sekwl_discrimination* d = nullptr;
  check(sekwl_discriminate(g1.get(), g2.get(), o.suite.c_str(), o.T, o.graph.c_str(), o.graph2.c_str(), &d));
  std::unique_ptr<sekwl_discrimination, void (*)(sekwl_discrimination*)> guard(d, sekwl_discrimination_free);
  CString body;
  check(sekwl_discrimination_json(d, &body.p));
  json out = report("discriminate", {{"suite", o.suite}, {"T", o.T}});
  out["graphs"] = {graph_info(o.graph, g1.get()), graph_info(o.graph2, g2.get())};
  out["report"] = json::parse(body.str());
  emit(dump(out), o.out);
}

json counts_json(const sekwl_counts& c) {
  return {{"triangles", c.triangles},
          {"tailed_triangles", c.tailed_triangles},
          {"three_stars", c.three_stars},
          {"four_cycles", c.four_cycles}};
}

void cmd_count(const Options& o) {
  auto g = load(o.graph, o.format);
  json out = report("count", {{"method", o.method}});
  out["graph"] = graph_info(o.graph, g.get());
  std::optional<sekwl_counts> closed, enumerated;
  if (o.method == "closed_form" || o.method == "both") {
    sekwl_counts c;
    check(sekwl_count_substructures(g.get(), SEKWL_COUNT_CLOSED_FORM, &c));
    closed = c;
    out["closed_form"] = counts_json(c);
  }
  if (o.method == "enumerate" || o.method == "both") {
    sekwl_counts c;
    check(sekwl_count_substructures(g.get(), SEKWL_COUNT_ENUMERATE, &c));
    enumerated = c;
    out["enumerate"] = counts_json(c);
  }
  if (closed && enumerated) out["agree"] = counts_json(*closed) == counts_json(*enumerated);
  emit(dump(out), o.out);
  if (closed && enumerated && !out["agree"].get<bool>()) throw CliError{1, "counting methods disagree"};
}

void cmd_theorem1(const Options& o) {
  sekwl_theorem1* t = nullptr;
  check(sekwl_theorem1_run(o.n, o.r, o.eps, o.trials, o.seed, &t));
  std::unique_ptr<sekwl_theorem1, void (*)(sekwl_theorem1*)> guard(t, sekwl_theorem1_free);
  if (!o.jsonl.empty()) {
    CString lines;
    check(sekwl_theorem1_jsonl(t, &lines.p));
    emit(lines.str(), o.jsonl);
  }
  CString summary;
  check(sekwl_theorem1_summary_json(t, &summary.p));
  json out = report("theorem1", {{"n", o.n}, {"r", o.r}, {"epsilon", o.eps}, {"trials", o.trials}, {"seed", o.seed}});
  out["summary"] = json::parse(summary.str());
  emit(dump(out), o.out);
}

void cmd_intersection_array(const Options& o) {
  auto g = load(o.graph, o.format);
  int regular = 0;
  CString text;
  check(sekwl_intersection_array(g.get(), &regular, &text.p));
  emit((regular ? text.str() : std::string("not distance-regular")) + "\n", o.out);
}

void cmd_counting_separation(const Options& o) {
  std::vector<GraphPtr> owned;
  json corpus_cfg;
  if (!o.corpus.empty()) {
    for (const auto& path : o.corpus) owned.push_back(load(path, o.format));
    corpus_cfg = {{"files", o.corpus}};
  } else {
    for (std::size_t i = 0; i < o.graphs; ++i) {
      const std::string spec = "erdos_renyi:n=" + std::to_string(o.corpus_n) + ",p=" + json(o.p).dump() +
                               ",seed=" + std::to_string(sekwl_derive_seed(o.seed, 0, i));
      sekwl_graph* g = nullptr;
      check(sekwl_graph_generate(spec.c_str(), 0, &g));
      owned.emplace_back(g);
    }
    corpus_cfg = {{"generator", "erdos_renyi"}, {"graphs", o.graphs}, {"n", o.corpus_n}, {"p", o.p}, {"seed", o.seed}};
  }
  std::vector<const sekwl_graph*> corpus;
  for (const auto& g : owned) corpus.push_back(g.get());
  CString body;
  double rate = 0;
  check(sekwl_counting_separation(corpus.data(), corpus.size(), o.algo.c_str(), o.T, &body.p, &rate));
  json out = report("counting-separation", {{"algo", o.algo}, {"T", o.T}, {"corpus", corpus_cfg}});
  out["result"] = json::parse(body.str());
  emit(dump(out), o.out);
}

void cmd_forward(const Options& o) {
  auto g = load(o.graph, o.format);
  auto enc = encoding_from(o.l, o.K, o.agg, o.forward_walk);
  sekwl_forward_config cfg;
  sekwl_default_forward_config(&cfg);
  cfg.K = o.K;
  cfg.layers = o.layers;
  cfg.width = o.width;
  cfg.combine = o.combine == "geometric" ? SEKWL_COMBINE_GEOMETRIC : SEKWL_COMBINE_SUM;
  cfg.alpha = o.alpha;
  cfg.normalize = o.normalize ? 1 : 0;
  cfg.sampler_cap = o.sample_cap;
  cfg.seed = o.seed;
  cfg.pool = o.pool == "sum" ? SEKWL_JK_SUM : SEKWL_JK_CONCAT;
  std::size_t len = 0;
  check(sekwl_forward_readout(g.get(), &enc, &cfg, nullptr, 0, &len));
  std::vector<double> vec(len);
  check(sekwl_forward_readout(g.get(), &enc, &cfg, vec.data(), vec.size(), &len));
  json config = encoding_json(enc);
  config.update({{"layers", o.layers},
                 {"width", o.width},
                 {"combine", o.combine},
                 {"alpha", o.alpha},
                 {"normalize", o.normalize},
                 {"sample_cap", o.sample_cap},
                 {"seed", o.seed},
                 {"pool", o.pool}});
  json out = report("forward", config);
  out["graph"] = graph_info(o.graph, g.get());
  out["readout"] = vec;
  emit(dump(out), o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Substructure-enhanced K-hop colour refinement toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sekwl_version());
  Options o;
  app.add_option("--threads", o.threads, "Worker thread cap (0 = hardware concurrency)")->capture_default_str();
  app.add_option("--seed", o.seed, "Master seed for every random choice")->capture_default_str();

  const auto formats = CLI::IsMember({"el", "g6"});
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Graph file format (el|g6); default inferred from the extension")
        ->check(formats);
  };
  auto add_out = [&](CLI::App* sub, const char* what) {
    sub->add_option("-o,--output", o.out, what)->capture_default_str();
  };
  auto add_encoding = [&](CLI::App* sub, std::string& walk) {
    sub->add_option("-K", o.K, "Hop radius K >= 1")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("-l", o.l, "Random-walk steps l >= 1")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--agg", o.agg, "Aggregation over hop sets")->capture_default_str()->check(
        CLI::IsMember({"mean", "sum"}));
    sub->add_option("--walk", walk, "Walk on the whole graph or inside each ego-net")
        ->capture_default_str()
        ->check(CLI::IsMember({"graph", "ego"}));
  };

  auto* gen = app.add_subcommand("generate", "Generate a graph from a spec string");
  gen->add_option("spec", o.spec, "Generator spec, e.g. rook4x4 or random_regular:n=100,r=3,seed=7")->required();
  gen->add_option("--format", o.format, "Output format (el|g6); default inferred from -o, el on stdout")
      ->check(formats);
  add_out(gen, "Output path; '-' or empty writes to stdout");
  gen->footer(std::string("Grammar:\n") + sekwl_generator_grammar());

  auto* enc = app.add_subcommand("encode", "Per-node substructure encoding as CSV");
  enc->add_option("graph", o.graph, "Graph file")->required();
  add_encoding(enc, o.walk);
  add_format(enc);
  add_out(enc, "CSV path (a .json sidecar is written next to it); stdout if empty");

  auto* ref = app.add_subcommand("refine", "Run one colour-refinement algorithm and print its trace");
  ref->add_option("graph", o.graph, "Graph file")->required();
  ref->add_option("--algo", o.algo, "Algorithm spec")->capture_default_str();
  ref->add_option("-T", o.T, "Default round cap")->capture_default_str()->check(CLI::PositiveNumber);
  add_format(ref);
  add_out(ref, "Report path; stdout if empty");
  ref->footer(std::string("Grammar:\n") + sekwl_algorithm_grammar());

  auto* dis = app.add_subcommand("discriminate", "Compare two graphs under a suite of algorithms");
  dis->add_option("first", o.graph, "First graph file")->required();
  dis->add_option("second", o.graph2, "Second graph file")->required();
  dis->add_option("--suite", o.suite, "Comma-separated algorithm specs")->capture_default_str();
  dis->add_option("-T", o.T, "Default round cap")->capture_default_str()->check(CLI::PositiveNumber);
  add_format(dis);
  add_out(dis, "Report path; stdout if empty");
  dis->footer(std::string("Grammar:\n") + sekwl_algorithm_grammar());

  auto* cnt = app.add_subcommand("count", "Count triangles, tailed triangles, 3-stars and 4-cycles");
  cnt->add_option("graph", o.graph, "Graph file")->required();
  cnt->add_option("--method", o.method, "closed_form, enumerate (n <= 64) or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"closed_form", "enumerate", "both"}));
  add_format(cnt);
  add_out(cnt, "Report path; stdout if empty");

  auto* thm = app.add_subcommand("theorem1", "Self-return separation experiment on random regular graphs");
  thm->add_option("--n", o.n, "Nodes per graph")->capture_default_str();
  thm->add_option("--r", o.r, "Degree")->capture_default_str();
  thm->add_option("--eps", o.eps, "Epsilon in the radius formula")->capture_default_str();
  thm->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
  thm->add_option("--jsonl", o.jsonl, "Write one JSON line per trial to this path");
  add_out(thm, "Summary path; stdout if empty");

  auto* ia = app.add_subcommand("intersection-array", "Print the intersection array of a distance-regular graph");
  ia->add_option("graph", o.graph, "Graph file")->required();
  add_format(ia);
  add_out(ia, "Output path; stdout if empty");

  auto* sep = app.add_subcommand("counting-separation",
                                 "Share of count-distinct graph pairs whose fingerprints differ");
  sep->add_option("graphs", o.corpus, "Graph files (default: a seeded erdos_renyi corpus)");
  sep->add_option("--algo", o.algo, "Algorithm spec")->capture_default_str();
  sep->add_option("-T", o.T, "Default round cap")->capture_default_str()->check(CLI::PositiveNumber);
  sep->add_option("--count", o.graphs, "Generated corpus size")->capture_default_str();
  sep->add_option("--n", o.corpus_n, "Generated graph order")->capture_default_str();
  sep->add_option("--p", o.p, "Generated edge probability")->capture_default_str();
  add_format(sep);
  add_out(sep, "Report path; stdout if empty");

  auto* fwd = app.add_subcommand("forward", "Parameter-free message passing and graph readout");
  fwd->add_option("graph", o.graph, "Graph file")->required();
  add_encoding(fwd, o.forward_walk);
  fwd->add_option("--layers", o.layers, "Number of layers")->capture_default_str()->check(CLI::PositiveNumber);
  fwd->add_option("--width", o.width, "Initial state width")->capture_default_str();
  fwd->add_option("--combine", o.combine, "Hop combination")
      ->capture_default_str()
      ->check(CLI::IsMember({"sum", "geometric"}));
  fwd->add_option("--alpha", o.alpha, "Geometric decay alpha in (0,1]")->capture_default_str();
  fwd->add_flag("--normalize", o.normalize, "Rescale hop weights to sum to 1");
  fwd->add_option("--sample-cap", o.sample_cap, "Neighbours kept per hop (0 = all)")->capture_default_str();
  fwd->add_option("--pool", o.pool, "Jumping-knowledge pooling")
      ->capture_default_str()
      ->check(CLI::IsMember({"sum", "concat"}));
  add_format(fwd);
  add_out(fwd, "Report path; stdout if empty");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  sekwl_set_threads(o.threads);
  try {
    if (gen->parsed()) cmd_generate(o);
    else if (enc->parsed()) cmd_encode(o);
    else if (ref->parsed()) cmd_refine(o);
    else if (dis->parsed()) cmd_discriminate(o);
    else if (cnt->parsed()) cmd_count(o);
    else if (thm->parsed()) cmd_theorem1(o);
    else if (ia->parsed()) cmd_intersection_array(o);
    else if (sep->parsed()) cmd_counting_separation(o);
    else if (fwd->parsed()) cmd_forward(o);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return 0;
}
