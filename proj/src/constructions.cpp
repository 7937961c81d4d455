#include "mcc/constructions.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace mcc {

std::vector<int> density_split_slices(const MultipartiteHost& host, int k) {
  if (k < 1) throw std::invalid_argument("density_split needs k >= 1");
  std::vector<int> slice(static_cast<std::size_t>(host.vertex_count()) + 1, 0);
  int offset = 0;  // slice that receives the next leftover vertex
  for (int part = 0; part < host.part_count(); ++part) {
    const int size = host.part_sizes()[part];
    const int base = size / k;
    const int extra = size % k;
    std::vector<int> slice_sizes(k, base);
    for (int i = 0; i < extra; ++i) ++slice_sizes[(offset + i) % k];
    offset = (offset + extra) % k;

    Vertex v = host.first_vertex(part);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < slice_sizes[j]; ++i) slice[v++] = j + 1;
    }
  }
  return slice;
}

Subgraph density_split(const MultipartiteHost& host, int k) {
  const auto slice = density_split_slices(host, k);
  const int n = host.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (slice[u] == slice[v] && host.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Subgraph(host, std::move(edges));
}

bool is_prime(long long value) {
  if (value < 2) return false;
  for (long long d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

AffinePlane::AffinePlane(int q) : q_(q), inverse_(q, 0) {
  if (!is_prime(q)) throw std::invalid_argument("affine plane order must be prime");
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (a * b % q == 1) inverse_[a] = b;
    }
  }
}

int AffinePlane::class_of_line(int p, int p2) const {
  const int dx = ((p2 / q_ - p / q_) % q_ + q_) % q_;
  const int dy = ((p2 % q_ - p % q_) % q_ + q_) % q_;
  if (dx == 0) return q_;
  return dy * inverse_[dx] % q_;
}

int AffinePlane::line_through(int point, int parallel_class) const {
  const int x = point / q_;
  const int y = point % q_;
  if (parallel_class == q_) return x;
  return ((y - parallel_class * x) % q_ + q_) % q_;
}

std::vector<int> affine_points(int q, int n) {
  const int points = q * q;
  if (n < points) throw std::invalid_argument("affine_coloring needs n >= q^2");
  std::vector<int> point(static_cast<std::size_t>(n) + 1, -1);
  const int base = n / points;
  const int extra = n % points;
  Vertex v = 1;
  for (int p = 0; p < points; ++p) {
    const int size = base + (p < extra ? 1 : 0);
    for (int i = 0; i < size; ++i) point[v++] = p;
  }
  return point;
}

ColoredCompleteGraph affine_coloring(int q, int n) {
  const AffinePlane plane(q);
  const auto point = affine_points(q, n);
  const int k = plane.class_count();
  ColoredCompleteGraph coloring(n, k);
  int next_inner = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (point[u] == point[v]) {
        coloring.set_color(u, v, next_inner + 1);
        next_inner = (next_inner + 1) % k;
      } else {
        coloring.set_color(u, v, plane.class_of_line(point[u], point[v]) + 1);
      }
    }
  }
  return coloring;
}

FourPartition::FourPartition(int n_) : n(n_) {
  if (n < 4) throw std::invalid_argument("four-part partition needs n >= 4");
  Vertex next = 1;
  for (int i = 0; i < 4; ++i) {
    sizes[i] = n / 4 + (i < n % 4 ? 1 : 0);
    first[i] = next;
    next += sizes[i];
  }
}

int FourPartition::part_of(Vertex v) const {
  for (int i = 3; i >= 0; --i) {
    if (v >= first[i]) return i;
  }
  throw std::out_of_range("vertex outside partition");
}

long long sixth_target(int n) { return (choose2(n) + 5) / 6; }

Color four_part_cross_color(int i, int j) {
  if (i > j) std::swap(i, j);
  if ((i == 0 && j == 1) || (i == 2 && j == 3)) return kRed;
  if ((i == 0 && j == 2) || (i == 1 && j == 3)) return kGreen;
  return kBlue;
}

namespace {

// Part sharing the green (resp. blue) component with a given part.
constexpr std::array<int, 4> kGreenMate = {2, 3, 0, 1};
constexpr std::array<int, 4> kBlueMate = {3, 2, 1, 0};

// Internal edges of each part grouped by color.
using InternalEdges = std::array<std::array<std::set<Edge>, 4>, 4>;

InternalEdges internal_edges(const ColoredCompleteGraph& coloring, const FourPartition& parts) {
  InternalEdges edges;
  for (int p = 0; p < 4; ++p) {
    const Vertex lo = parts.first[p];
    const Vertex hi = lo + parts.sizes[p];
    for (Vertex u = lo; u < hi; ++u) {
      for (Vertex v = u + 1; v < hi; ++v) edges[p][coloring.color(u, v)].insert({u, v});
    }
  }
  return edges;
}

std::array<long long, 6> component_sizes(const FourPartition& parts, const InternalEdges& inner) {
  auto count = [&](int p, Color c) { return static_cast<long long>(inner[p][c].size()); };
  return {parts.cross_edges(0, 1) + count(0, kRed) + count(1, kRed),
          parts.cross_edges(2, 3) + count(2, kRed) + count(3, kRed),
          parts.cross_edges(0, 2) + count(0, kGreen) + count(2, kGreen),
          parts.cross_edges(1, 3) + count(1, kGreen) + count(3, kGreen),
          parts.cross_edges(0, 3) + count(0, kBlue) + count(3, kBlue),
          parts.cross_edges(1, 2) + count(1, kBlue) + count(2, kBlue)};
}

void require_cross_structure(const ColoredCompleteGraph& coloring, const FourPartition& parts) {
  if (coloring.color_count() != 3) throw std::invalid_argument("expected a 3-coloring");
  if (!coloring.is_full()) throw std::invalid_argument("expected a full coloring");
  const int n = coloring.vertex_count();
  for (Vertex u = 1; u <= n; ++u) {
    const int pu = parts.part_of(u);
    for (Vertex v = u + 1; v <= n; ++v) {
      const int pv = parts.part_of(v);
      if (pu != pv && coloring.color(u, v) != four_part_cross_color(pu, pv)) {
        throw std::invalid_argument("cross edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " breaks the four-part structure");
      }
    }
  }
}

}  // namespace

std::array<long long, 6> four_part_component_sizes(const ColoredCompleteGraph& coloring) {
  const FourPartition parts(coloring.vertex_count());
  require_cross_structure(coloring, parts);
  return component_sizes(parts, internal_edges(coloring, parts));
}

ColoredCompleteGraph k3_initial_nice(int n) {
  if (n < kMinFourPartN) {
    throw std::invalid_argument("k3 construction needs n >= " + std::to_string(kMinFourPartN));
  }
  const FourPartition parts(n);
  const long long target = sixth_target(n);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (parts.cross_edges(i, j) > target) throw std::invalid_argument("cross block exceeds target");
    }
  }

  // Color and quota for the internal edges of each part.
  const std::array<Color, 4> quota_color = {kGreen, kGreen, kBlue, kBlue};
  const std::array<long long, 4> quota = {
      target - parts.cross_edges(0, 2), target - parts.cross_edges(1, 3),
      target - parts.cross_edges(1, 2), target - parts.cross_edges(0, 3)};

  ColoredCompleteGraph coloring(n, 3);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const int pu = parts.part_of(u);
      const int pv = parts.part_of(v);
      if (pu != pv) coloring.set_color(u, v, four_part_cross_color(pu, pv));
    }
  }
  for (int p = 0; p < 4; ++p) {
    if (quota[p] < 0 || quota[p] > choose2(parts.sizes[p])) {
      throw std::invalid_argument("internal quota does not fit in part " + std::to_string(p + 1));
    }
    long long remaining = quota[p];
    const Vertex lo = parts.first[p];
    const Vertex hi = lo + parts.sizes[p];
    for (Vertex u = lo; u < hi; ++u) {
      for (Vertex v = u + 1; v < hi; ++v) {
        coloring.set_color(u, v, remaining > 0 ? quota_color[p] : kRed);
        if (remaining > 0) --remaining;
      }
    }
  }
  return coloring;
}

K3OptimizeResult k3_optimize_counted(const ColoredCompleteGraph& input) {
  const int n = input.vertex_count();
  if (n < kMinFourPartN) {
    throw std::invalid_argument("k3 construction needs n >= " + std::to_string(kMinFourPartN));
  }
  const FourPartition parts(n);
  require_cross_structure(input, parts);
  const long long target = sixth_target(n);

  auto inner = internal_edges(input, parts);
  auto sizes = component_sizes(parts, inner);
  for (int i = 2; i < 6; ++i) {
    if (sizes[i] != target) throw std::invalid_argument("coloring is not nice");
  }

  K3OptimizeResult result{input, 0};
  while (sizes[0] > target || sizes[1] > target) {
    const int heavy = sizes[0] > target ? 0 : 1;
    bool swapped = false;
    for (int p : {2 * heavy, 2 * heavy + 1}) {
      if (inner[p][kRed].empty()) continue;
      for (auto [mate, color] : {std::pair{kGreenMate[p], kGreen}, std::pair{kBlueMate[p], kBlue}}) {
        if (inner[mate][color].empty()) continue;
        const Edge red_edge = *inner[p][kRed].begin();
        const Edge other = *inner[mate][color].begin();
        inner[p][kRed].erase(inner[p][kRed].begin());
        inner[mate][color].erase(inner[mate][color].begin());
        inner[p][color].insert(red_edge);
        inner[mate][kRed].insert(other);
        result.coloring.set_color(red_edge.u, red_edge.v, color);
        result.coloring.set_color(other.u, other.v, kRed);
        swapped = true;
        break;
      }
      if (swapped) break;
    }
    if (!swapped) {
      throw std::runtime_error("no legal exchange while a red component exceeds the target (n = " +
                               std::to_string(n) + ")");
    }
    const auto next = component_sizes(parts, inner);
    if (next[heavy] != sizes[heavy] - 1) throw std::logic_error("exchange did not shrink red side");
    sizes = next;
    ++result.swaps;
  }
  return result;
}

}  // namespace mcc
