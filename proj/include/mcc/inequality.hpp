#pragma once

#include <span>
#include <vector>

#include "mcc/exact.hpp"
#include "mcc/graph_core.hpp"

namespace mcc {

/// Outcome of one exact inequality check lhs >= rhs.
struct InequalityReport {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  Rational slack;  // lhs - rhs

  static InequalityReport compare(Rational lhs, Rational rhs) {
    InequalityReport report{std::move(lhs), std::move(rhs), false, 0};
    report.slack = report.lhs - report.rhs;
    report.holds = report.slack >= 0;
    return report;
  }
};

/// Two nonnegative integer weight vectors of equal length.
struct WeightVectors {
  std::vector<long long> a;
  std::vector<long long> b;
};

/**
 * ((sum a)(sum b) - sum a_i b_i)^2 >= ((sum a)^2 - sum a_i^2)((sum b)^2 - sum b_i^2)
 *
 * Throws std::invalid_argument on a negative entry, a length mismatch or
 * empty vectors. `holds` is true for every valid input.
 */
InequalityReport check_weight_cs(const WeightVectors& w);

/// e(S,T)^2 >= 4 |E(G[S])| |E(G[T])| on a complete multipartite host.
InequalityReport check_multipartite_cs(const MultipartiteHost& host, std::span<const Vertex> s,
                                       std::span<const Vertex> t);

/**
 * The component of h maximizing |E(H')| / f(V(H')), ties to the smallest
 * vertex id. Since the f-weights of the components sum to |E(G)|, the chosen
 * ratio is at least |E(H)| / |E(G)|, and the returned component satisfies
 * |E(H')| * |E(G)| >= |E(H)|^2. Both facts are checked before returning;
 * a violation throws std::logic_error.
 *
 * Throws std::invalid_argument when the host has a single part or h lives
 * on a different host.
 */
Component heavy_component(const MultipartiteHost& host, const Subgraph& h);

/// |E(H')| * |E(G)| >= |E(H)|^2 for a chosen component.
InequalityReport heavy_component_report(const MultipartiteHost& host, const Subgraph& h,
                                        const Component& chosen);

/**
 * Picks the largest color class (ties to the smaller color) of a full
 * coloring and returns heavy_component of it over K_n. The result has at
 * least C(n,2)/k^2 edges.
 *
 * Throws std::invalid_argument on a partial coloring or n < 2.
 */
ColoredComponent guaranteed_component(const ColoredCompleteGraph& coloring);

}  // namespace mcc
