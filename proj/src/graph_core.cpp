#include "mcc/graph_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mcc/disjoint_sets.hpp"

namespace mcc {

MultipartiteHost::MultipartiteHost(std::vector<int> part_sizes) : part_sizes_(std::move(part_sizes)) {
  if (part_sizes_.empty()) throw std::invalid_argument("host needs at least one part");
  long long sum_squares = 0;
  part_index_.push_back(-1);
  for (int i = 0; i < part_count(); ++i) {
    const int size = part_sizes_[i];
    if (size < 1) throw std::invalid_argument("part sizes must be positive");
    first_vertex_.push_back(vertex_count_ + 1);
    vertex_count_ += size;
    sum_squares += static_cast<long long>(size) * size;
    part_index_.insert(part_index_.end(), size, i);
  }
  const long long n = vertex_count_;
  edge_count_ = (n * n - sum_squares) / 2;
}

MultipartiteHost MultipartiteHost::complete(int n) {
  if (n < 1) throw std::invalid_argument("K_n needs n >= 1");
  return MultipartiteHost(std::vector<int>(n, 1));
}

int MultipartiteHost::part_of(Vertex v) const {
  if (!contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " outside host");
  return part_index_[v];
}

bool MultipartiteHost::adjacent(Vertex a, Vertex b) const { return part_of(a) != part_of(b); }

ColoredCompleteGraph::ColoredCompleteGraph(int n, int k) : n_(n), k_(k) {
  if (n < 1) throw std::invalid_argument("coloring needs n >= 1");
  if (k < 1 || k > kMaxColors) throw std::invalid_argument("color count out of range");
  colors_.assign(static_cast<std::size_t>(choose2(n)), kUncolored);
}

std::size_t ColoredCompleteGraph::pair_index(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > n_ || a == b) {
    throw std::out_of_range("pair {" + std::to_string(a) + "," + std::to_string(b) + "} invalid");
  }
  // Pairs (a, *) for smaller a come first: rows of length n-1, n-2, ...
  const long long row = a - 1;
  const long long before = row * (n_ - 1) - row * (row - 1) / 2;
  return static_cast<std::size_t>(before + (b - a - 1));
}

void ColoredCompleteGraph::set_color(Vertex a, Vertex b, Color c) {
  if (c < 0 || c > k_) throw std::out_of_range("color " + std::to_string(c) + " out of range");
  colors_[pair_index(a, b)] = static_cast<std::uint8_t>(c);
}

bool ColoredCompleteGraph::is_full() const {
  return std::find(colors_.begin(), colors_.end(), kUncolored) == colors_.end();
}

Subgraph::Subgraph(MultipartiteHost host, std::vector<Edge> edges)
    : host_(std::move(host)), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    e = make_edge(e.u, e.v);
    if (!host_.contains(e.u) || !host_.contains(e.v)) {
      throw std::invalid_argument("edge endpoint outside host");
    }
    if (!host_.adjacent(e.u, e.v)) throw std::invalid_argument("edge inside a host part");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
}

std::vector<Component> components_of(const Subgraph& subgraph) {
  const int n = subgraph.vertex_count();
  DisjointSets sets(static_cast<std::size_t>(n) + 1);
  for (const Edge& e : subgraph.edges()) sets.unite(e.u, e.v);

  // Vertices are scanned in increasing order, so each component is created
  // at its smallest vertex and the output is already sorted.
  std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
  std::vector<Component> components;
  for (Vertex v = 1; v <= n; ++v) {
    const auto root = sets.find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(components.size());
      components.emplace_back();
    }
    components[slot[root]].vertices.push_back(v);
  }
  for (const Edge& e : subgraph.edges()) ++components[slot[sets.find(e.u)]].edge_count;
  return components;
}

namespace {

// Per-part membership counts of a vertex set, ignoring repeats.
std::vector<long long> part_counts(const MultipartiteHost& host, std::span<const Vertex> s) {
  std::vector<long long> counts(host.part_count(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(host.vertex_count()) + 1, false);
  for (Vertex v : s) {
    const int part = host.part_of(v);
    if (seen[v]) continue;
    seen[v] = true;
    ++counts[part];
  }
  return counts;
}

}  // namespace

long long ordered_pair_count(const MultipartiteHost& host, std::span<const Vertex> s,
                             std::span<const Vertex> t) {
  const auto a = part_counts(host, s);
  const auto b = part_counts(host, t);
  long long sum_a = 0, sum_b = 0, diagonal = 0;
  for (int i = 0; i < host.part_count(); ++i) {
    sum_a += a[i];
    sum_b += b[i];
    diagonal += a[i] * b[i];
  }
  return sum_a * sum_b - diagonal;
}

long long induced_edge_count(const MultipartiteHost& host, std::span<const Vertex> s) {
  return ordered_pair_count(host, s, s) / 2;
}

long long doubled_f_weight(const MultipartiteHost& host, std::span<const Vertex> s) {
  const auto a = part_counts(host, s);
  const long long n = host.vertex_count();
  long long total = 0;
  for (int i = 0; i < host.part_count(); ++i) total += a[i] * (n - host.part_sizes()[i]);
  return total;
}

Rational f_weight(const MultipartiteHost& host, std::span<const Vertex> s) {
  return Rational(doubled_f_weight(host, s), 2);
}

Subgraph color_class(const ColoredCompleteGraph& coloring, Color c) {
  if (c < 1 || c > coloring.color_count()) {
    throw std::out_of_range("color " + std::to_string(c) + " out of range");
  }
  const int n = coloring.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (coloring.color(u, v) == c) edges.push_back({u, v});
    }
  }
  return Subgraph(MultipartiteHost::complete(n), std::move(edges));
}

std::optional<ColoredComponent> max_mono_component(const ColoredCompleteGraph& coloring) {
  if (coloring.vertex_count() < 2) return std::nullopt;
  std::optional<ColoredComponent> best;
  for (Color c = 1; c <= coloring.color_count(); ++c) {
    for (auto& component : components_of(color_class(coloring, c))) {
      // Strict comparison keeps the earlier color and the smaller min vertex.
      if (!best || component.edge_count > best->component.edge_count) {
        best = ColoredComponent{c, std::move(component)};
      }
    }
  }
  return best;
}

}  // namespace mcc
