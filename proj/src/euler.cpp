#include "mcc/euler.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "mcc/disjoint_sets.hpp"

namespace mcc {

std::vector<int> degrees(const Subgraph& g) {
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (const Edge& e : g.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree;
}

bool is_forest(int vertex_count, const std::vector<Edge>& edges) {
  DisjointSets sets(static_cast<std::size_t>(vertex_count) + 1);
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return sets.unite(e.u, e.v); });
}

namespace {

// Sorted neighbor lists (index 0 unused).
std::vector<std::vector<Vertex>> neighbors(const Subgraph& g) {
  std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(g.vertex_count()) + 1);
  for (const Edge& e : g.edges()) {
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
  return adjacency;
}

}  // namespace

ParityFixResult parity_fix(const Subgraph& g) {
  const int n = g.vertex_count();
  const auto adjacency = neighbors(g);
  const auto degree = degrees(g);

  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex root = 1; root <= n; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (Vertex w : adjacency[v]) {
        if (visited[w]) continue;
        visited[w] = true;
        parent[w] = v;
        frontier.push(w);
      }
    }
  }

  // Children appear after their parents in BFS order, so a reverse sweep
  // settles every vertex before its parent edge is decided.
  std::vector<int> marked(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Edge> removed;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (parent[v] == 0) continue;
    if ((degree[v] + marked[v]) % 2 == 1) {
      removed.push_back(make_edge(v, parent[v]));
      ++marked[v];
      ++marked[parent[v]];
    }
  }
  std::sort(removed.begin(), removed.end());

  std::vector<Edge> kept;
  kept.reserve(g.edges().size() - removed.size());
  std::set_difference(g.edges().begin(), g.edges().end(), removed.begin(), removed.end(),
                      std::back_inserter(kept));
  return {std::move(removed), Subgraph(g.host(), std::move(kept))};
}

Circuit eulerian_circuit(const Subgraph& g, const Component& component) {
  if (component.vertices.empty()) throw std::invalid_argument("empty component");
  const int n = g.vertex_count();
  std::vector<bool> inside(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : component.vertices) inside.at(v) = true;

  struct Arc {
    Vertex to;
    int edge;
  };
  std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(n) + 1);
  int edge_total = 0;
  for (const Edge& e : g.edges()) {
    if (!inside[e.u] && !inside[e.v]) continue;
    if (inside[e.u] != inside[e.v]) throw std::invalid_argument("an edge leaves the component");
    arcs[e.u].push_back({e.v, edge_total});
    arcs[e.v].push_back({e.u, edge_total});
    ++edge_total;
  }
  for (Vertex v : component.vertices) {
    if (arcs[v].size() % 2 != 0) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has odd degree");
    }
    std::sort(arcs[v].begin(), arcs[v].end(),
              [](const Arc& a, const Arc& b) { return a.to != b.to ? a.to < b.to : a.edge < b.edge; });
  }

  const Vertex start = component.min_vertex();
  std::vector<bool> used(edge_total, false);
  std::vector<std::size_t> next(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack{start};
  Circuit circuit;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto& cursor = next[v];
    while (cursor < arcs[v].size() && used[arcs[v][cursor].edge]) ++cursor;
    if (cursor == arcs[v].size()) {
      circuit.vertices.push_back(v);
      stack.pop_back();
    } else {
      used[arcs[v][cursor].edge] = true;
      stack.push_back(arcs[v][cursor].to);
    }
  }
  if (circuit.length() != edge_total) throw std::invalid_argument("component is not connected");
  std::reverse(circuit.vertices.begin(), circuit.vertices.end());
  return circuit;
}

bool circuit_covers(const Subgraph& g, const Component& component, const Circuit& circuit) {
  std::vector<bool> inside(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (Vertex v : component.vertices) inside[v] = true;
  std::vector<Edge> expected;
  for (const Edge& e : g.edges()) {
    if (inside[e.u] && inside[e.v]) expected.push_back(e);
  }
  if (circuit.vertices.empty()) return expected.empty();
  if (circuit.vertices.front() != circuit.vertices.back()) return false;

  std::vector<Edge> walked;
  for (std::size_t i = 0; i + 1 < circuit.vertices.size(); ++i) {
    walked.push_back(make_edge(circuit.vertices[i], circuit.vertices[i + 1]));
  }
  std::sort(walked.begin(), walked.end());
  return walked == expected;  // both sorted; equality also rules out repeats
}

Circuit longest_class_circuit(const Subgraph& cls, ColorCircuitStats& stats) {
  ParityFixResult fix = parity_fix(cls);
  stats.class_edges = cls.edge_count();
  stats.removed_edges = static_cast<long long>(fix.removed.size());
  const auto degree = degrees(fix.trimmed);
  stats.trimmed_even = std::all_of(degree.begin(), degree.end(), [](int d) { return d % 2 == 0; });
  stats.removed_acyclic = is_forest(cls.vertex_count(), fix.removed);
  stats.circuits_valid = true;
  stats.longest = 0;

  Circuit best{{1}};
  for (const auto& component : components_of(fix.trimmed)) {
    if (component.edge_count == 0) continue;
    Circuit circuit = eulerian_circuit(fix.trimmed, component);
    stats.circuits_valid = stats.circuits_valid && circuit_covers(fix.trimmed, component, circuit);
    if (circuit.length() > best.length()) best = std::move(circuit);
  }
  stats.longest = best.length();
  return best;
}

BestCircuit best_mono_circuit(const ColoredCompleteGraph& coloring) {
  BestCircuit best;
  best.color = 1;
  best.circuit.vertices = {1};
  for (Color c = 1; c <= coloring.color_count(); ++c) {
    ColorCircuitStats stats;
    stats.color = c;
    Circuit circuit = longest_class_circuit(color_class(coloring, c), stats);
    if (circuit.length() > best.circuit.length()) {
      best.color = c;
      best.circuit = std::move(circuit);
    }
    best.total_removed += stats.removed_edges;
    best.per_color.push_back(stats);
  }
  return best;
}

}  // namespace mcc
