#include "core/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "core/error.hpp"

namespace sekwl {

namespace {

constexpr std::size_t kGraph6Limit = std::size_t{1} << 18;

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool parse_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

EdgeListLoad from_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::optional<std::size_t> declared_n;
  std::size_t max_id_plus_one = 0;
  std::size_t line_no = 0;
  bool seen_data = false;

  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=")) {
      std::uint64_t n = 0;
      if (seen_data || declared_n || !parse_uint(trim(line.substr(2)), n) || n > (std::uint64_t{1} << 32)) {
        fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": malformed n= header");
      }
      declared_n = static_cast<std::size_t>(n);
      continue;
    }

    auto toks = split_ws(line);
    std::uint64_t u = 0, v = 0;
    if (toks.size() != 2 || !parse_uint(toks[0], u) || !parse_uint(toks[1], v) || u >= (std::uint64_t{1} << 32) ||
        v >= (std::uint64_t{1} << 32)) {
      fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected two non-negative integers < 2^32");
    }
    seen_data = true;
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + 1);
  }

  std::size_t n = max_id_plus_one;
  if (declared_n) {
    if (*declared_n < max_id_plus_one) {
      fail(ErrorKind::parse, "n=" + std::to_string(*declared_n) + " header is smaller than max node id + 1");
    }
    n = *declared_n;
  }
  EdgeListLoad out;
  out.graph = Graph::from_edges(n, edges, &out.duplicates, &out.self_loops);
  return out;
}

std::string to_edge_list(const Graph& g) {
  // The header is only needed when trailing nodes are isolated.
  std::string out;
  const std::size_t n = g.node_count();
  if (n == 0 || g.degree(static_cast<NodeId>(n - 1)) == 0) out = "n=" + std::to_string(n) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<Graph> from_graph6(std::string_view bytes) {
  std::vector<Graph> out;
  std::size_t record = 0;
  while (!bytes.empty()) {
    auto nl = bytes.find('\n');
    std::string_view line = bytes.substr(0, nl);
    bytes = nl == std::string_view::npos ? std::string_view{} : bytes.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) continue;

    auto where = [&] { return "graph6 record " + std::to_string(record); };
    for (unsigned char c : line) {
      if (c < 63 || c > 126) fail(ErrorKind::format, where() + ": byte " + std::to_string(c) + " outside [63,126]");
    }

    std::size_t pos = 0;
    std::size_t n = 0;
    auto take6 = [&](std::size_t count) {
      std::size_t value = 0;
      for (std::size_t i = 0; i < count; ++i) {
        if (pos >= line.size()) fail(ErrorKind::format, where() + ": truncated size header");
        value = (value << 6) | static_cast<std::size_t>(static_cast<unsigned char>(line[pos++]) - 63);
      }
      return value;
    };
    if (static_cast<unsigned char>(line[0]) != 126) {
      n = take6(1);
    } else {
      ++pos;
      if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126) {
        fail(ErrorKind::capability, where() + ": graphs with n >= 2^18 are not supported");
      }
      n = take6(3);
    }

    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (line.size() - pos != body) {
      fail(ErrorKind::format, where() + ": expected " + std::to_string(body) + " body bytes, found " +
                                  std::to_string(line.size() - pos));
    }

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i, ++k) {
        auto byte = static_cast<unsigned char>(line[pos + k / 6]) - 63;
        if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
    out.push_back(Graph::from_edges(n, edges));
    ++record;
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n >= kGraph6Limit) fail(ErrorKind::capability, "graph6 encoding supports n < 2^18");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(static_cast<NodeId>(i), static_cast<NodeId>(j)) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

GraphFormat format_from_path(const std::string& path) {
  if (path.ends_with(".g6")) return GraphFormat::graph6;
  if (path.ends_with(".el") || path.ends_with(".txt") || path.ends_with(".edges")) return GraphFormat::edge_list;
  fail(ErrorKind::usage, "cannot infer graph format from '" + path + "' (use .el or .g6, or pass --format)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) fail(ErrorKind::io, "write failed for '" + path + "'");
}

std::vector<Graph> load_graphs(const std::string& path, GraphFormat format) {
  auto text = read_file(path);
  try {
    if (format == GraphFormat::graph6) return from_graph6(text);
    return {from_edge_list(text).graph};
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void save_graph(const std::string& path, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::graph6) {
    write_file(path, to_graph6(g) + "\n");
  } else {
    write_file(path, to_edge_list(g));
  }
}

}  // namespace sekwl
