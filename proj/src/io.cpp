#include "semistream/io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "semistream/errors.hpp"

namespace semistream {
namespace {

bool parse_int(const std::string& token, int& out) {
  if (token.empty()) return false;
  std::size_t i = 0;
  if (token[0] == '-') i = 1;
  if (i >= token.size()) return false;
  long long value = 0;
  for (; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') return false;
    value = value * 10 + (token[i] - '0');
    if (value > 1'000'000'000LL) return false;
  }
  out = static_cast<int>(token[0] == '-' ? -value : value);
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

BipartiteGraph load_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<std::pair<int, int>> header;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      int n = 0, m = 0;
      if (header || tokens.size() != 4 || tokens[1] != "semi" || !parse_int(tokens[2], n) ||
          !parse_int(tokens[3], m) || n < 1 || m < 1) {
        throw ParseError("malformed header", line_no);
      }
      header = {n, m};
      continue;
    }
    if (tokens[0] == "e") {
      if (!header) throw ParseError("edge before header", line_no);
      int a = 0, b = 0;
      if (tokens.size() != 3 || !parse_int(tokens[1], a) || !parse_int(tokens[2], b)) {
        throw ParseError("non-integer token", line_no);
      }
      if (a < 1 || a > header->first || b < 1 || b > header->second) {
        throw ParseError("vertex index out of range", line_no);
      }
      edges.push_back(Edge{a - 1, b - 1});
      continue;
    }
    throw ParseError("unrecognized line type '" + tokens[0] + "'", line_no);
  }
  if (!header) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
  return BipartiteGraph(header->first, header->second, std::move(edges));
}

BipartiteGraph load_graph(const std::string& text) {
  std::istringstream iss(text);
  return load_graph(iss);
}

BipartiteGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_graph(in);
}

std::string save_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p semi " << g.num_a() << ' ' << g.num_b() << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
  }
  return out.str();
}

std::string save_edge_subset(const EdgeSubset& subset) {
  const BipartiteGraph& g = subset.graph();
  std::ostringstream out;
  out << "p semi " << g.num_a() << ' ' << g.num_b() << '\n';
  for (int id : subset.ids()) {
    const Edge& e = g.edge(id);
    out << "e " << e.a + 1 << ' ' << e.b + 1 << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void save_graph_file(const BipartiteGraph& g, const std::string& path) {
  write_text_file(save_graph(g), path);
}

}  // namespace semistream
