#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mcc/bounds.hpp"
#include "mcc/coloring_io.hpp"
#include "mcc/constructions.hpp"
#include "oracles.hpp"

using namespace mcc;

namespace {

QuadraticSurd q(const Rational& value, const Rational& z) { return QuadraticSurd::rational(value, z); }

std::string serialized(const ColoredCompleteGraph& g) {
  std::ostringstream out;
  write_coloring(out, g);
  return out.str();
}

}  // namespace

TEST_CASE("lower_bound examples") {
  CHECK(lower_bound(100, 2) == Rational(19800, 13));
  CHECK(lower_bound(18, 3) == 26);
  CHECK(lower_bound(2, 2) == Rational(4, 13));
  CHECK(lower_bound(10, 4) == Rational(4 * 45, 4 * 16 - 16 + 5));
  CHECK(density_square_bound(6, 2) == Rational(15, 4));
  CHECK_THROWS_AS(lower_bound(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound(5, 1), std::invalid_argument);
}

TEST_CASE("lower_bound for k=3 is the sixth ceiling and dominates the generic formula") {
  for (int n = 2; n <= 200; ++n) {
    const long long pairs = choose2(n);
    CHECK(lower_bound(n, 3) == (pairs + 5) / 6);
    CHECK(lower_bound(n, 3) >= Rational(4 * pairs, 29));
    for (int k = 2; k <= 6; ++k) CHECK(lower_bound(n, k) >= density_square_bound(n, k));
  }
}

TEST_CASE("smoothing_max examples") {
  SUBCASE("x=1/3, z=1/9, m=5") {
    const SmoothingInstance inst{Rational(1, 3), Rational(1, 9), 5};
    const auto best = smoothing_max(inst);
    const Rational z = inst.z;
    const std::vector<QuadraticSurd> expected{q(Rational(1, 3), z), q(Rational(1, 3), z), q(Rational(1, 3), z),
                                              q(0, z), q(0, z)};
    REQUIRE(best.v.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(best.v[i] == expected[i]);
    CHECK(best.value == q(Rational(1, 3), z));
    CHECK(smoothing_feasible(best.v, inst));
  }
  SUBCASE("x=1/2, z=1/4, m=4") {
    const SmoothingInstance inst{Rational(1, 2), Rational(1, 4), 4};
    const auto best = smoothing_max(inst);
    CHECK(best.v[0] == q(Rational(1, 2), inst.z));
    CHECK(best.v[1] == q(Rational(1, 2), inst.z));
    CHECK(best.v[2].sign() == 0);
    CHECK(best.v[3].sign() == 0);
    CHECK(best.value == q(Rational(1, 2), inst.z));
  }
  SUBCASE("irrational square root") {
    const SmoothingInstance inst{Rational(2, 5), Rational(1, 5), 3};
    const auto best = smoothing_max(inst);
    CHECK(smoothing_feasible(best.v, inst));
    // m' = 2, so v = (1 - 1/sqrt5, 1/sqrt5, 0).
    CHECK(best.v[2].sign() == 0);
    CHECK(std::abs(best.v[0].to_double() - (1 - 1 / std::sqrt(5.0))) < 1e-12);
  }
  SUBCASE("x below z leaves every prefix constraint slack") {
    const SmoothingInstance inst{Rational(1, 10), Rational(1, 5), 3};
    const auto best = smoothing_max(inst);
    CHECK(best.v[0] == q(1, inst.z));
    CHECK(best.value == q(1, inst.z));
    CHECK(smoothing_feasible(best.v, inst));
  }
  CHECK_THROWS_AS(smoothing_max({Rational(1, 2), Rational(1, 9), 5}), std::invalid_argument);
  CHECK_THROWS_AS(smoothing_max({Rational(1, 3), Rational(1, 9), 3}), std::invalid_argument);
  CHECK_THROWS_AS(smoothing_max({Rational(0), Rational(1, 9), 3}), std::invalid_argument);
  CHECK_THROWS_AS(smoothing_max({Rational(1, 3), Rational(2), 3}), std::invalid_argument);
}

TEST_CASE("smoothing_feasible examples") {
  const SmoothingInstance inst{Rational(1, 3), Rational(1, 9), 5};
  const std::vector<Rational> uniform(5, Rational(1, 5));
  CHECK(smoothing_feasible(uniform, inst));
  const std::vector<Rational> spike{1, 0, 0, 0, 0};
  CHECK_FALSE(smoothing_feasible(spike, inst));
  const std::vector<Rational> unsorted{Rational(1, 5), Rational(3, 10), Rational(1, 5), Rational(1, 5),
                                       Rational(1, 10)};
  CHECK_FALSE(smoothing_feasible(unsorted, inst));
  const std::vector<Rational> short_sum(5, Rational(1, 6));
  CHECK_FALSE(smoothing_feasible(short_sum, inst));
  const std::vector<Rational> wrong_length(4, Rational(1, 4));
  CHECK_FALSE(smoothing_feasible(wrong_length, inst));
}

TEST_CASE("smoothing_max agrees with polytope vertex enumeration") {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 60) {
    // z = (a/b)^2 sometimes, a non-square otherwise.
    const long long b = 2 + rng() % 9;
    const long long a = 1 + rng() % (b - 1);
    const Rational z = (rng() % 2) ? Rational(a * a, b * b) : Rational(a, b);
    const long long d = 1 + rng() % 12;
    const long long c = 1 + rng() % d;
    const Rational x(c, d);
    SmoothingInstance inst{x, z, 1};
    if (x * x > z) continue;
    const int capped = inst.capped_count();
    if (capped > 3) continue;
    inst.m = capped + 1 + static_cast<int>(rng() % (4 - capped));
    const auto best = smoothing_max(inst);
    REQUIRE(smoothing_feasible(best.v, inst));
    const auto vertices = oracle::smoothing_vertices(inst);
    REQUIRE_FALSE(vertices.empty());
    QuadraticSurd top = q(0, z);
    bool closed_form_is_vertex = false;
    for (const auto& v : vertices) {
      QuadraticSurd value = q(0, z);
      for (const auto& t : v) value += t * t;
      if (top < value) top = value;
      bool same = true;
      for (int i = 0; i < inst.m; ++i) same = same && v[i] == best.v[i];
      closed_form_is_vertex = closed_form_is_vertex || same;
    }
    CHECK(top == best.value);
    CHECK(closed_form_is_vertex);
    ++checked;
  }
}

TEST_CASE("component_trace examples") {
  SUBCASE("balanced four-part construction at n=48") {
    const auto t = component_trace(k3_optimize(k3_initial_nice(48)));
    CHECK(t.x == Rational(1, 3));
    CHECK(t.z == Rational(1, 6));
    CHECK(t.red_sizes == std::vector<int>{24, 24});
    REQUIRE(t.checks.size() == 1);
    CHECK(t.checks[0].prefix == 24);
    CHECK(std::abs(t.checks[0].bound.to_double() - 28.4) < 0.1);
    CHECK(t.checks[0].holds);
    CHECK(t.passed());
  }
  SUBCASE("one color covers everything") {
    ColoredCompleteGraph g(7, 2);
    for (Vertex u = 1; u <= 7; ++u)
      for (Vertex v = u + 1; v <= 7; ++v) g.set_color(u, v, 1);
    const auto t = component_trace(g);
    CHECK(t.red_sizes.size() == 1);
    CHECK(t.checks.empty());
    CHECK(t.passed());
  }
  SUBCASE("random 3-coloring of K30") {
    CHECK(component_trace(random_coloring(30, 3, 1)).passed());
  }
  CHECK_THROWS_AS(component_trace(ColoredCompleteGraph(5, 3)), std::invalid_argument);
  CHECK_THROWS_AS(component_trace(random_coloring(5, 1, 3)), std::invalid_argument);
}

TEST_CASE("component_trace passes on random colorings") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 25);
    const int k = 2 + static_cast<int>(rng() % 4);
    const auto t = component_trace(random_coloring(n, k, rng()));
    CHECK(t.passed());
  }
}

TEST_CASE("random_coloring contract") {
  CHECK(serialized(random_coloring(12, 3, 99)) == serialized(random_coloring(12, 3, 99)));
  CHECK(serialized(random_coloring(12, 3, 99)) != serialized(random_coloring(12, 3, 100)));
  const auto mono = random_coloring(6, 1, 4);
  for (Vertex u = 1; u <= 6; ++u)
    for (Vertex v = u + 1; v <= 6; ++v) CHECK(mono.color(u, v) == 1);
  const auto small = random_coloring(5, 2, 8);
  CHECK(small.is_full());
  int colored = 0;
  for (Vertex u = 1; u <= 5; ++u) {
    for (Vertex v = u + 1; v <= 5; ++v) {
      colored += 1;
      CHECK((small.color(u, v) == 1 || small.color(u, v) == 2));
    }
  }
  CHECK(colored == 10);
  CHECK_THROWS_AS(random_coloring(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_coloring(4, 0, 0), std::invalid_argument);
}

TEST_CASE("uniform_below stays in range and hits every value") {
  std::mt19937_64 engine(5);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) seen[uniform_below(engine, 7)] += 1;
  for (int count : seen) CHECK(count > 800);
}
