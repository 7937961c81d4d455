#include "mcc/inequality.hpp"

#include <stdexcept>

namespace mcc {

InequalityReport check_weight_cs(const WeightVectors& w) {
  if (w.a.size() != w.b.size()) throw std::invalid_argument("weight vectors differ in length");
  if (w.a.empty()) throw std::invalid_argument("weight vectors are empty");
  BigInt sum_a = 0, sum_b = 0, sum_ab = 0, sum_aa = 0, sum_bb = 0;
  for (std::size_t i = 0; i < w.a.size(); ++i) {
    if (w.a[i] < 0 || w.b[i] < 0) throw std::invalid_argument("negative weight");
    const BigInt a = w.a[i];
    const BigInt b = w.b[i];
    sum_a += a;
    sum_b += b;
    sum_ab += a * b;
    sum_aa += a * a;
    sum_bb += b * b;
  }
  const BigInt cross = sum_a * sum_b - sum_ab;
  return InequalityReport::compare(Rational(cross * cross),
                                   Rational((sum_a * sum_a - sum_aa) * (sum_b * sum_b - sum_bb)));
}

InequalityReport check_multipartite_cs(const MultipartiteHost& host, std::span<const Vertex> s,
                                       std::span<const Vertex> t) {
  const BigInt cross = ordered_pair_count(host, s, t);
  const BigInt inside_s = induced_edge_count(host, s);
  const BigInt inside_t = induced_edge_count(host, t);
  return InequalityReport::compare(Rational(cross * cross), Rational(4 * inside_s * inside_t));
}

InequalityReport heavy_component_report(const MultipartiteHost& host, const Subgraph& h,
                                        const Component& chosen) {
  const BigInt lhs = BigInt(chosen.edge_count) * host.edge_count();
  const BigInt total = h.edge_count();
  return InequalityReport::compare(Rational(lhs), Rational(total * total));
}

Component heavy_component(const MultipartiteHost& host, const Subgraph& h) {
  if (host.part_count() < 2) throw std::invalid_argument("host needs at least two parts");
  if (!(h.host() == host)) throw std::invalid_argument("subgraph lives on a different host");

  auto components = components_of(h);
  // Ratio edges / f = 2 * edges / e(S, V); compare edges_a * e_b against
  // edges_b * e_a. Every vertex has positive degree, so e(S, V) > 0.
  std::size_t best = 0;
  long long best_weight = doubled_f_weight(host, components[0].vertices);
  for (std::size_t i = 1; i < components.size(); ++i) {
    const long long weight = doubled_f_weight(host, components[i].vertices);
    const BigInt challenger = BigInt(components[i].edge_count) * best_weight;
    const BigInt incumbent = BigInt(components[best].edge_count) * weight;
    if (challenger > incumbent) {
      best = i;
      best_weight = weight;
    }
  }

  // Mediant step: 2 * edges / e(S,V) >= |E(H)| / |E(G)|.
  const BigInt mediant_lhs = BigInt(2) * components[best].edge_count * host.edge_count();
  const BigInt mediant_rhs = BigInt(h.edge_count()) * best_weight;
  if (mediant_lhs < mediant_rhs) throw std::logic_error("heavy_component: mediant step violated");
  if (!heavy_component_report(host, h, components[best]).holds) {
    throw std::logic_error("heavy_component: |E(H')||E(G)| >= |E(H)|^2 violated");
  }
  return std::move(components[best]);
}

ColoredComponent guaranteed_component(const ColoredCompleteGraph& coloring) {
  const int n = coloring.vertex_count();
  if (n < 2) throw std::invalid_argument("guaranteed_component needs n >= 2");
  if (!coloring.is_full()) throw std::invalid_argument("guaranteed_component needs a full coloring");

  const int k = coloring.color_count();
  std::vector<long long> class_sizes(k + 1, 0);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) ++class_sizes[coloring.color(u, v)];
  }
  Color densest = 1;
  for (Color c = 2; c <= k; ++c) {
    if (class_sizes[c] > class_sizes[densest]) densest = c;
  }

  const auto host = MultipartiteHost::complete(n);
  Component chosen = heavy_component(host, color_class(coloring, densest));
  const BigInt pairs = choose2(n);
  if (BigInt(chosen.edge_count) * k * k < pairs) {
    throw std::logic_error("guaranteed_component: fewer than C(n,2)/k^2 edges");
  }
  return {densest, std::move(chosen)};
}

}  // namespace mcc
