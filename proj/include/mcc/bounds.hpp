#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcc/exact.hpp"
#include "mcc/graph_core.hpp"

namespace mcc {

/**
 * Guaranteed size of a largest monochromatic component in any k-coloring
 * of K_n: C(n,2) / (k^2 - k + 5/4), or ceil(C(n,2)/6) for k = 3.
 *
 * Throws std::invalid_argument when n < 2 or k < 2.
 */
Rational lower_bound(int n, int k);

/// C(n,2) / k^2, the bound obtained from a densest color class alone.
Rational density_square_bound(int n, int k);

/**
 * Parameters of the smoothing problem: maximize sum v_i^2 over
 * v_1 >= ... >= v_m >= 0 with sum v_i = 1 and
 * v_1 + ... + v_j <= 1 - x/sqrt(z) + j sqrt(z) for j in [1, m-1].
 *
 * Accepted instances satisfy 0 < x <= sqrt(z), 0 < z <= 1 and
 * m >= floor(x/z) + 1.
 */
struct SmoothingInstance {
  Rational x;
  Rational z;
  int m = 1;

  /// floor(x / z).
  int capped_count() const;
  /// Throws std::invalid_argument unless the instance is accepted.
  void validate() const;
  /// 1 - x/sqrt(z) + j sqrt(z), exactly.
  QuadraticSurd prefix_bound(int j) const;
};

struct SmoothingMaximizer {
  std::vector<QuadraticSurd> v;  // length m
  QuadraticSurd value;           // sum of squares
};

/**
 * Closed-form maximizer with m' = floor(x/z): v_1 = 1 - x/sqrt(z) + sqrt(z),
 * v_i = sqrt(z) for 2 <= i <= m', v_{m'+1} = x/sqrt(z) - m' sqrt(z), zeros
 * after. When m' = 0 every prefix constraint is slack and the maximizer is
 * (1, 0, ..., 0).
 */
SmoothingMaximizer smoothing_max(const SmoothingInstance& instance);

/// Exact feasibility: monotone, nonnegative, sums to 1, prefix bounds hold.
/// Returns false for a vector of the wrong length.
bool smoothing_feasible(std::span<const QuadraticSurd> v, const SmoothingInstance& instance);
bool smoothing_feasible(std::span<const Rational> v, const SmoothingInstance& instance);

struct PrefixCheck {
  int j = 0;
  long long prefix = 0;  // vertices in the j largest red components
  QuadraticSurd bound;   // (1 - x/sqrt(z) + j sqrt(z)) n
  bool holds = false;
};

/**
 * Diagnostics for the densest color ("red") of a full coloring: its density
 * x, the largest component fraction z, the red component vertex counts in
 * decreasing order and, for every j in [1, m-1], whether the j largest red
 * components cover at most (1 - x/sqrt(z) + j sqrt(z)) n vertices.
 * Comparisons are exact in Q(sqrt(z)); delta = k - 1/sqrt(z) is reported
 * as a double only.
 */
struct ComponentTrace {
  int n = 0;
  int k = 0;
  Color red = kUncolored;
  long long red_edges = 0;
  long long max_component_edges = 0;
  Rational x;
  Rational z;
  double delta = 0.0;
  std::vector<int> red_sizes;
  std::vector<PrefixCheck> checks;

  bool sizes_sum_to_n = false;
  bool density_at_least_inverse_k = false;
  bool z_at_least_x_squared = false;

  long long pair_sum = 0;     // sum C(|V(R_i)|, 2)
  QuadraticSurd pair_bound;   // (n^2 * smoothing maximum - n) / 2
  bool pair_bound_holds = false;

  bool passed() const;
};

/// Throws std::invalid_argument on a partial coloring, n < 2 or k < 2.
ComponentTrace component_trace(const ColoredCompleteGraph& coloring);

/// Uniform integer in [0, bound) by rejection from a 64-bit engine. Unlike
/// std::uniform_int_distribution the stream is the same on every platform.
template <class Engine>
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = engine();
  } while (draw >= limit);
  return draw % bound;
}

/**
 * Each pair, in lexicographic order, gets a color uniform over 1..k drawn
 * from std::mt19937_64 seeded with `seed`.
 *
 * Throws std::invalid_argument when n < 2 or k < 1.
 */
ColoredCompleteGraph random_coloring(int n, int k, std::uint64_t seed);

}  // namespace mcc
