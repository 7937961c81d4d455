#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mcc/graph_core.hpp"

namespace mcc {

/**
 * Splits every host part into k slices whose sizes differ by at most one
 * and returns the union of the subgraphs induced on the j-th slices, for
 * j = 1..k. Leftover vertices of successive parts go to successive slices
 * (cyclically), so singleton parts spread evenly too.
 *
 * Throws std::invalid_argument when k < 1.
 */
Subgraph density_split(const MultipartiteHost& host, int k);

/// The slice (1..k) of every vertex used by density_split; index 0 unused.
std::vector<int> density_split_slices(const MultipartiteHost& host, int k);

/// Deterministic trial division.
bool is_prime(long long value);

/**
 * Affine plane AG(2, q) over Z_q for prime q.
 *
 * Points are pairs (x, y) indexed x*q + y. Parallel classes are indexed
 * 0..q: class s < q holds the lines of slope s (direction (1, s)), class q
 * holds the vertical lines (direction (0, 1)).
 */
class AffinePlane {
 public:
  explicit AffinePlane(int q);

  int order() const { return q_; }
  int point_count() const { return q_ * q_; }
  int class_count() const { return q_ + 1; }

  /// Parallel class of the unique line through two distinct points.
  int class_of_line(int p, int p2) const;
  /// Index (0..q-1) of the line of a given class through a point.
  int line_through(int point, int parallel_class) const;

 private:
  int q_;
  std::vector<int> inverse_;
};

/**
 * Colors K_n with k = q+1 colors from AG(2, q). Vertices are spread over the
 * q^2 points in contiguous blocks as evenly as possible; an edge between
 * different points takes color (class of their line) + 1; edges inside one
 * point cycle through colors 1..k in lexicographic edge order.
 *
 * Throws std::invalid_argument unless q is prime and n >= q^2.
 */
ColoredCompleteGraph affine_coloring(int q, int n);

/// Point (0-based) of each vertex in affine_coloring; index 0 unused.
std::vector<int> affine_points(int q, int n);

inline constexpr Color kRed = 1;
inline constexpr Color kGreen = 2;
inline constexpr Color kBlue = 3;

/// Minimum n for which the four-part three-coloring is constructed.
inline constexpr int kMinFourPartN = 46;

/// Four contiguous parts with sizes ceil(n/4) = |V1| >= ... >= |V4| = floor(n/4).
struct FourPartition {
  explicit FourPartition(int n);

  int n;
  std::array<int, 4> sizes{};
  std::array<Vertex, 4> first{};

  /// 0-based part of a vertex.
  int part_of(Vertex v) const;
  long long cross_edges(int i, int j) const {
    return static_cast<long long>(sizes[i]) * sizes[j];
  }
};

/// ceil(C(n,2) / 6).
long long sixth_target(int n);

/// The color of edges between parts i != j (0-based): V1V2, V3V4 red;
/// V1V3, V2V4 green; V1V4, V2V3 blue.
Color four_part_cross_color(int i, int j);

/// Edge counts of the two components of each color, in the order
/// {red on V1+V2, red on V3+V4, green on V1+V3, green on V2+V4,
///  blue on V1+V4, blue on V2+V3}.
std::array<long long, 6> four_part_component_sizes(const ColoredCompleteGraph& coloring);

/**
 * The initial "nice" three-coloring of K_n: the four-part cross coloring,
 * with ceil(C(n,2)/6) - e(V1,V3) edges inside V1 and ceil(C(n,2)/6) - e(V2,V4)
 * inside V2 colored green, ceil(C(n,2)/6) - e(V2,V3) inside V3 and
 * ceil(C(n,2)/6) - e(V1,V4) inside V4 colored blue (lexicographically first
 * internal edges), and all remaining internal edges red.
 *
 * Throws std::invalid_argument when n < 46 or a quota does not fit.
 */
ColoredCompleteGraph k3_initial_nice(int n);

struct K3OptimizeResult {
  ColoredCompleteGraph coloring;
  long long swaps = 0;
};

/**
 * Repeatedly exchanges a red internal edge on the heavier red side with a
 * green or blue internal edge of the matching part until both red
 * components have at most ceil(C(n,2)/6) edges. Each exchange moves one edge
 * from the heavier red component to the lighter one and leaves the green and
 * blue component sizes unchanged.
 *
 * Throws std::invalid_argument if the input lacks the four-part cross
 * structure or is not nice, and std::runtime_error if no exchange is
 * available while a red component is still too large.
 */
K3OptimizeResult k3_optimize_counted(const ColoredCompleteGraph& coloring);

inline ColoredCompleteGraph k3_optimize(const ColoredCompleteGraph& coloring) {
  return k3_optimize_counted(coloring).coloring;
}

}  // namespace mcc
