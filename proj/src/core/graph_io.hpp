#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/graph.hpp"

namespace sekwl {

struct EdgeListLoad {
  Graph graph;
  std::size_t duplicates = 0;
  std::size_t self_loops = 0;
};

/// Parses the edge-list text format: `#` comments, optional `n=<k>` header,
/// then whitespace-separated `<u> <v>` pairs.
EdgeListLoad from_edge_list(std::string_view text);

/// One line per edge, preceded by an `n=<k>` header.
std::string to_edge_list(const Graph& g);

/// Decodes every graph6 record in `bytes` (one per line).
std::vector<Graph> from_graph6(std::string_view bytes);

/// Encodes one graph6 record, without a trailing newline.
std::string to_graph6(const Graph& g);

enum class GraphFormat { edge_list, graph6 };

GraphFormat format_from_path(const std::string& path);

std::vector<Graph> load_graphs(const std::string& path, GraphFormat format);
void save_graph(const std::string& path, const Graph& g, GraphFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace sekwl
