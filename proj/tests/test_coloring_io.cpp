#include <doctest.h>

#include <sstream>

#include "mcc/bounds.hpp"
#include "mcc/coloring_io.hpp"

using namespace mcc;

namespace {

ColoredCompleteGraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_coloring(in);
}

int error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("reads the coloring text format") {
  const auto g = parse("3 2\n1 2 1\n1 3 1\n2 3 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.color_count() == 2);
  CHECK(g.color(1, 3) == 1);
  CHECK(g.color(3, 2) == 2);
  CHECK(g.is_full());

  const auto partial = parse("# comment\n\n4 3\n2 4 3\n");
  CHECK(partial.color(2, 4) == 3);
  CHECK(partial.color(1, 2) == 0);
  CHECK_FALSE(partial.is_full());
}

TEST_CASE("rejects malformed input with a line number") {
  CHECK(error_line("3 2\n1 2 1\n1 2 2\n") == 3);  // duplicate pair
  CHECK(error_line("3 2\n2 1 1\n") == 2);         // u > v
  CHECK(error_line("3 2\n1 4 1\n") == 2);         // v > n
  CHECK(error_line("3 2\n1 2 3\n") == 2);         // color > k
  CHECK(error_line("3 2\n1 2\n") == 2);           // missing field
  CHECK(error_line("3 2\n1 2 1 5\n") == 2);       // extra field
  CHECK(error_line("3 x\n") == 1);
  CHECK(error_line("0 2\n") == 1);
  CHECK(error_line("") == 0);
}

TEST_CASE("writer output parses back to the same coloring") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_coloring(12, 4, seed);
    // Leave a few pairs uncolored.
    g.set_color(1, 2, 0);
    g.set_color(3, 9, 0);
    std::ostringstream out;
    write_coloring(out, g);
    const auto back = parse(out.str());
    CHECK(back == g);
    std::ostringstream again;
    write_coloring(again, back);
    CHECK(again.str() == out.str());
  }
}
