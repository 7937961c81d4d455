#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcc/exact.hpp"

namespace mcc {

/// 1-based vertex id.
using Vertex = int;
/// Edge color; 0 means uncolored.
using Color = int;

inline constexpr Color kUncolored = 0;
inline constexpr int kMaxColors = 255;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Builds an edge with its endpoints in canonical order.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/**
 * A complete r-partite host graph given by its part sizes.
 *
 * Vertices 1..n are assigned to parts in contiguous blocks following the
 * declaration order; two vertices are adjacent iff they lie in different
 * parts. With n singleton parts this is K_n.
 */
class MultipartiteHost {
 public:
  explicit MultipartiteHost(std::vector<int> part_sizes);

  /// K_n as n singleton parts.
  static MultipartiteHost complete(int n);

  int vertex_count() const { return vertex_count_; }
  int part_count() const { return static_cast<int>(part_sizes_.size()); }
  std::span<const int> part_sizes() const { return part_sizes_; }
  long long edge_count() const { return edge_count_; }

  /// 0-based index of the part containing v.
  int part_of(Vertex v) const;
  /// First vertex id of a part (0-based part index).
  Vertex first_vertex(int part) const { return first_vertex_[part]; }
  bool contains(Vertex v) const { return v >= 1 && v <= vertex_count_; }
  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const MultipartiteHost& a, const MultipartiteHost& b) {
    return a.part_sizes_ == b.part_sizes_;
  }

 private:
  std::vector<int> part_sizes_;
  std::vector<Vertex> first_vertex_;
  std::vector<int> part_index_;  // indexed by vertex id, slot 0 unused
  int vertex_count_ = 0;
  long long edge_count_ = 0;
};

/**
 * A (possibly partial) k-coloring of the edges of K_n. Each unordered pair
 * holds a value in {0, 1, ..., k}, 0 meaning uncolored.
 */
class ColoredCompleteGraph {
 public:
  /// All pairs start uncolored.
  ColoredCompleteGraph(int n, int k);

  int vertex_count() const { return n_; }
  int color_count() const { return k_; }
  long long pair_count() const { return static_cast<long long>(colors_.size()); }

  Color color(Vertex a, Vertex b) const { return colors_[pair_index(a, b)]; }
  void set_color(Vertex a, Vertex b, Color c);

  /// Position of the pair {a, b} in lexicographic pair order.
  std::size_t pair_index(Vertex a, Vertex b) const;

  /// No pair is left uncolored.
  bool is_full() const;

  friend bool operator==(const ColoredCompleteGraph&, const ColoredCompleteGraph&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<std::uint8_t> colors_;
};

/// A spanning subgraph of a multipartite host: an edge subset over the full
/// vertex set. Edges are kept sorted and unique.
class Subgraph {
 public:
  /// Throws std::invalid_argument on a duplicate edge, a loop, an
  /// out-of-range endpoint, or an edge inside one host part.
  Subgraph(MultipartiteHost host, std::vector<Edge> edges);

  const MultipartiteHost& host() const { return host_; }
  std::span<const Edge> edges() const { return edges_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }
  int vertex_count() const { return host_.vertex_count(); }

 private:
  MultipartiteHost host_;
  std::vector<Edge> edges_;
};

/// One connected component of a spanning subgraph.
struct Component {
  std::vector<Vertex> vertices;  // sorted ascending, nonempty
  long long edge_count = 0;

  Vertex min_vertex() const { return vertices.front(); }
  int size() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const Component&, const Component&) = default;
};

struct ColoredComponent {
  Color color = kUncolored;
  Component component;
};

/// Connected components (isolated vertices included), ordered by smallest
/// vertex id.
std::vector<Component> components_of(const Subgraph& subgraph);

/// Number of ordered pairs (s, t) in S x T with s and t in different parts.
/// S and T may overlap; repeated ids count once. Throws std::out_of_range on
/// an id outside the host.
long long ordered_pair_count(const MultipartiteHost& host, std::span<const Vertex> s,
                             std::span<const Vertex> t);

/// Edges of the host induced on S.
long long induced_edge_count(const MultipartiteHost& host, std::span<const Vertex> s);

/// Half of ordered_pair_count(S, V): a weighted vertex count summing to
/// |E(G)| over any partition of V.
Rational f_weight(const MultipartiteHost& host, std::span<const Vertex> s);

/// Integer numerator of f_weight, i.e. e(S, V). Useful for ratio
/// comparisons that cross-multiply.
long long doubled_f_weight(const MultipartiteHost& host, std::span<const Vertex> s);

/// Spanning subgraph of K_n formed by the pairs of color c. Throws
/// std::out_of_range unless 1 <= c <= k.
Subgraph color_class(const ColoredCompleteGraph& coloring, Color c);

/// The component with the most edges over all color classes; ties go to
/// the smaller color, then the smaller minimum vertex. Empty when n < 2.
std::optional<ColoredComponent> max_mono_component(const ColoredCompleteGraph& coloring);

}  // namespace mcc
