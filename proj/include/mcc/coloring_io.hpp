#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mcc/graph_core.hpp"

namespace mcc {

/// Malformed coloring text; carries the 1-based line number (0 when the
/// problem is not tied to a line, e.g. an empty file).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Text format: a header line "n k", then one line "u v c" per pair with
// 1 <= u < v <= n and 0 <= c <= k. Absent pairs are uncolored. Blank lines
// and lines starting with '#' are ignored.
ColoredCompleteGraph read_coloring(std::istream& in);
ColoredCompleteGraph read_coloring_file(const std::string& path);

/// Canonical writer: header, then every colored pair in lexicographic order.
void write_coloring(std::ostream& out, const ColoredCompleteGraph& coloring);

/// A subgraph of K_n as a 1-coloring (edges color 1, everything else absent).
ColoredCompleteGraph subgraph_as_coloring(const Subgraph& subgraph);

}  // namespace mcc
