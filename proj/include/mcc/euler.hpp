#pragma once

#include <vector>

#include "mcc/graph_core.hpp"

namespace mcc {

/// A subgraph split into a removed forest and an even-degree remainder.
struct ParityFixResult {
  std::vector<Edge> removed;  // sorted; a forest
  Subgraph trimmed;           // every vertex has even degree
};

/**
 * Removes a forest touching every odd-degree vertex so that all degrees
 * become even.
 *
 * A spanning forest is grown breadth-first from the lowest unvisited
 * vertex, neighbors in increasing id order. Walking each tree from the
 * leaves up, the edge to the parent is marked whenever the vertex's degree
 * plus its marked incident edges is odd. The marked edges are removed; each
 * root ends up even because degree sums are even.
 */
ParityFixResult parity_fix(const Subgraph& g);

/// A closed trail v_0, ..., v_L with v_0 = v_L.
struct Circuit {
  std::vector<Vertex> vertices;  // L + 1 entries; a lone start vertex when L = 0

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
  Vertex start() const { return vertices.empty() ? 0 : vertices.front(); }
};

/**
 * Eulerian circuit of one component of g, starting at its smallest vertex
 * and always leaving along the smallest unused edge (Hierholzer's splice).
 *
 * Throws std::invalid_argument if a component vertex has odd degree or the
 * component's edges are not connected.
 */
Circuit eulerian_circuit(const Subgraph& g, const Component& component);

/// Checks that a circuit is closed and uses every edge of the component
/// exactly once.
bool circuit_covers(const Subgraph& g, const Component& component, const Circuit& circuit);

struct ColorCircuitStats {
  Color color = kUncolored;
  long long class_edges = 0;
  long long removed_edges = 0;
  bool trimmed_even = false;
  bool removed_acyclic = false;
  bool circuits_valid = false;  // every circuit covers its component exactly once
  int longest = 0;
};

struct BestCircuit {
  Color color = kUncolored;
  Circuit circuit;
  std::vector<ColorCircuitStats> per_color;  // colors 1..k in order
  long long total_removed = 0;
};

/// parity_fix on one color class followed by an Eulerian circuit of each
/// trimmed component; returns the longest (ties to the smaller start vertex).
Circuit longest_class_circuit(const Subgraph& color_class, ColorCircuitStats& stats);

/**
 * For every color class: parity_fix, then an Eulerian circuit of each
 * trimmed component. Returns the longest circuit (ties to the smaller
 * color, then the smaller start vertex) with per-color statistics.
 * Uncolored pairs simply belong to no class.
 */
BestCircuit best_mono_circuit(const ColoredCompleteGraph& coloring);

/// Degree of every vertex (index 0 unused).
std::vector<int> degrees(const Subgraph& g);

/// True when the edges contain no cycle.
bool is_forest(int vertex_count, const std::vector<Edge>& edges);

}  // namespace mcc
