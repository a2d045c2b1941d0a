#pragma once

#include <iosfwd>
#include <string>

#include "semistream/graph.hpp"

namespace semistream {

// Edge-list text format:
//   header line   "p semi <n> <m>"
//   edge lines    "e <a> <b>"     with 1-indexed a in [1,n], b in [1,m]
//   comments      "c ..."         ignored
// UTF-8, LF or CRLF line endings. Vertices are 1-indexed in files and
// 0-indexed in memory. Duplicate edge lines collapse to one edge.

BipartiteGraph load_graph(std::istream& in);
BipartiteGraph load_graph(const std::string& text);
BipartiteGraph load_graph_file(const std::string& path);

std::string save_graph(const BipartiteGraph& g);
std::string save_edge_subset(const EdgeSubset& subset);
void save_graph_file(const BipartiteGraph& g, const std::string& path);
void write_text_file(const std::string& text, const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace semistream
