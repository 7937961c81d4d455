#include "mcc/coloring_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace mcc {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Reads exactly `count` integers from the line; anything else is an error.
std::vector<long long> parse_fields(const std::string& line, int line_no, std::size_t count) {
  std::istringstream fields(line);
  std::vector<long long> values;
  long long value;
  while (fields >> value) values.push_back(value);
  if (!fields.eof() || values.size() != count) {
    throw ParseError(line_no, "expected " + std::to_string(count) + " integers");
  }
  return values;
}

}  // namespace

ColoredCompleteGraph read_coloring(std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!skippable(line)) break;
  }
  if (in.eof() && skippable(line)) throw ParseError(0, "missing header line");

  const auto header = parse_fields(line, line_no, 2);
  if (header[0] < 1 || header[0] > 1'000'000) throw ParseError(line_no, "vertex count out of range");
  if (header[1] < 1 || header[1] > kMaxColors) throw ParseError(line_no, "color count out of range");
  const int n = static_cast<int>(header[0]);
  const int k = static_cast<int>(header[1]);

  ColoredCompleteGraph coloring(n, k);
  std::vector<bool> seen(static_cast<std::size_t>(coloring.pair_count()), false);
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    const auto f = parse_fields(line, line_no, 3);
    if (f[0] < 1 || f[0] >= f[1] || f[1] > n) throw ParseError(line_no, "need 1 <= u < v <= n");
    if (f[2] < 0 || f[2] > k) throw ParseError(line_no, "color outside 0..k");
    const auto u = static_cast<Vertex>(f[0]);
    const auto v = static_cast<Vertex>(f[1]);
    const auto index = coloring.pair_index(u, v);
    if (seen[index]) throw ParseError(line_no, "duplicate pair");
    seen[index] = true;
    coloring.set_color(u, v, static_cast<Color>(f[2]));
  }
  return coloring;
}

ColoredCompleteGraph read_coloring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_coloring(in);
}

void write_coloring(std::ostream& out, const ColoredCompleteGraph& coloring) {
  const int n = coloring.vertex_count();
  std::string buffer = std::to_string(n) + " " + std::to_string(coloring.color_count()) + "\n";
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const Color c = coloring.color(u, v);
      if (c == kUncolored) continue;
      buffer += std::to_string(u);
      buffer += ' ';
      buffer += std::to_string(v);
      buffer += ' ';
      buffer += std::to_string(c);
      buffer += '\n';
    }
  }
  out << buffer;
}

ColoredCompleteGraph subgraph_as_coloring(const Subgraph& subgraph) {
  ColoredCompleteGraph coloring(subgraph.vertex_count(), 1);
  for (const Edge& e : subgraph.edges()) coloring.set_color(e.u, e.v, 1);
  return coloring;
}

}  // namespace mcc
