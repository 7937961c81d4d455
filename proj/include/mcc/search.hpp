#pragma once

#include <span>

#include "mcc/graph_core.hpp"

namespace mcc {

struct SearchOptions {
  int jobs = 1;
  /// Feasibility guard; instances beyond it are rejected.
  int max_n = 7;
  int max_k = 3;
};

struct SearchResult {
  int value = 0;                    // min over colorings of the max component
  ColoredCompleteGraph witness{1, 1};
  long long nodes = 0;              // search nodes visited (depends on scheduling)
};

/**
 * Exact min over all full k-colorings of K_n of the largest monochromatic
 * component edge count, by branch and bound.
 *
 * Edges are assigned in lexicographic order. Color labels are canonical by
 * first use, and a branch is cut as soon as some component reaches the
 * incumbent, since components only grow as edges are added. The incumbent
 * starts from an affine-plane coloring when k - 1 is prime (and n allows it)
 * or from a cyclic coloring otherwise. With jobs > 1 the first few edge
 * assignments are split across threads sharing the incumbent.
 *
 * The witness is the first coloring in search order attaining the value, so
 * value and witness do not depend on `jobs`.
 *
 * Throws std::invalid_argument when n < 2, k < 1 or the guard is exceeded.
 */
SearchResult brute_force_min_max_component(int n, int k, const SearchOptions& options = {});

/// Known exact values that are out of reach for exhaustive search.
struct KnownValue {
  int n;
  int k;
  int value;
};

/// M(17, 3) = 24: one more than ceil(C(17,2)/6).
inline constexpr KnownValue kKnownValues[] = {{17, 3, 24}};

}  // namespace mcc
