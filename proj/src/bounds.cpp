#include "mcc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mcc {

Rational lower_bound(int n, int k) {
  if (n < 2) throw std::invalid_argument("lower_bound needs n >= 2");
  if (k < 2) throw std::invalid_argument("lower_bound needs k >= 2");
  const BigInt pairs = choose2(n);
  if (k == 3) return Rational(ceil(Rational(pairs, 6)));
  const BigInt big_k = k;
  return Rational(4 * pairs, 4 * big_k * big_k - 4 * big_k + 5);
}

Rational density_square_bound(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("density_square_bound needs n >= 2, k >= 1");
  return Rational(BigInt(choose2(n)), BigInt(k) * k);
}

int SmoothingInstance::capped_count() const {
  if (z <= 0) throw std::invalid_argument("smoothing instance needs z > 0");
  return floor(Rational(x / z)).convert_to<int>();
}

void SmoothingInstance::validate() const {
  if (x <= 0 || z <= 0) throw std::invalid_argument("smoothing instance needs x, z > 0");
  if (z > 1) throw std::invalid_argument("smoothing instance needs z <= 1");
  if (x * x > z) throw std::invalid_argument("smoothing instance needs x <= sqrt(z)");
  if (m < capped_count() + 1) throw std::invalid_argument("smoothing instance needs m >= floor(x/z) + 1");
}

QuadraticSurd SmoothingInstance::prefix_bound(int j) const {
  // 1 - x/sqrt(z) + j sqrt(z) = 1 + (j - x/z) sqrt(z)
  return {1, Rational(j) - x / z, z};
}

SmoothingMaximizer smoothing_max(const SmoothingInstance& instance) {
  instance.validate();
  const Rational& z = instance.z;
  const int capped = instance.capped_count();
  const Rational ratio = instance.x / z;

  SmoothingMaximizer result;
  result.v.assign(instance.m, QuadraticSurd::rational(0, z));
  if (capped == 0) {
    result.v[0] = QuadraticSurd::rational(1, z);
  } else {
    result.v[0] = QuadraticSurd(1, 1 - ratio, z);
    for (int i = 1; i < capped; ++i) result.v[i] = QuadraticSurd::root(z);
    result.v[capped] = QuadraticSurd(0, ratio - capped, z);
  }
  result.value = QuadraticSurd::rational(0, z);
  for (const auto& value : result.v) result.value += value * value;
  return result;
}

bool smoothing_feasible(std::span<const QuadraticSurd> v, const SmoothingInstance& instance) {
  if (static_cast<int>(v.size()) != instance.m || v.empty()) return false;
  const Rational& z = instance.z;
  QuadraticSurd prefix = QuadraticSurd::rational(0, z);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].sign() < 0) return false;
    if (i > 0 && v[i - 1] < v[i]) return false;
    prefix += v[i];
    const int j = static_cast<int>(i) + 1;
    if (j < instance.m && !(prefix <= instance.prefix_bound(j))) return false;
  }
  return prefix == QuadraticSurd::rational(1, z);
}

bool smoothing_feasible(std::span<const Rational> v, const SmoothingInstance& instance) {
  std::vector<QuadraticSurd> lifted;
  lifted.reserve(v.size());
  for (const auto& value : v) lifted.push_back(QuadraticSurd::rational(value, instance.z));
  return smoothing_feasible(lifted, instance);
}

bool ComponentTrace::passed() const {
  const bool prefixes = std::all_of(checks.begin(), checks.end(), [](const PrefixCheck& c) { return c.holds; });
  return prefixes && sizes_sum_to_n && density_at_least_inverse_k && z_at_least_x_squared &&
         pair_bound_holds;
}

ComponentTrace component_trace(const ColoredCompleteGraph& coloring) {
  const int n = coloring.vertex_count();
  const int k = coloring.color_count();
  if (n < 2) throw std::invalid_argument("component_trace needs n >= 2");
  if (k < 2) throw std::invalid_argument("component_trace needs k >= 2");
  if (!coloring.is_full()) throw std::invalid_argument("component_trace needs a full coloring");

  ComponentTrace trace;
  trace.n = n;
  trace.k = k;

  std::vector<std::vector<Component>> components(k + 1);
  Color red = 1;
  long long red_edges = -1;
  for (Color c = 1; c <= k; ++c) {
    const Subgraph cls = color_class(coloring, c);
    if (cls.edge_count() > red_edges) {
      red = c;
      red_edges = cls.edge_count();
    }
    components[c] = components_of(cls);
    for (const auto& component : components[c]) {
      trace.max_component_edges = std::max(trace.max_component_edges, component.edge_count);
    }
  }
  trace.red = red;
  trace.red_edges = red_edges;

  const BigInt pairs = choose2(n);
  trace.x = Rational(BigInt(red_edges), pairs);
  trace.z = Rational(BigInt(trace.max_component_edges), pairs);
  const Rational& x = trace.x;
  const Rational& z = trace.z;
  trace.delta = k - 1.0 / std::sqrt(z.convert_to<double>());

  for (const auto& component : components[red]) trace.red_sizes.push_back(component.size());
  std::sort(trace.red_sizes.begin(), trace.red_sizes.end(), std::greater<>());
  const int m = static_cast<int>(trace.red_sizes.size());

  long long total = 0;
  for (int size : trace.red_sizes) total += size;
  trace.sizes_sum_to_n = total == n;
  trace.density_at_least_inverse_k = x * k >= 1;
  trace.z_at_least_x_squared = z >= x * x;

  SmoothingInstance instance{x, z, std::max(m, 1)};
  long long prefix = 0;
  for (int j = 1; j <= m - 1; ++j) {
    prefix += trace.red_sizes[j - 1];
    PrefixCheck check;
    check.j = j;
    check.prefix = prefix;
    check.bound = instance.prefix_bound(j) * Rational(n);
    check.holds = QuadraticSurd::rational(prefix, z) <= check.bound;
    trace.checks.push_back(std::move(check));
  }

  for (int size : trace.red_sizes) trace.pair_sum += choose2(size);
  if (trace.z_at_least_x_squared) {
    // Pad with zero-size components when needed; padding keeps feasibility.
    instance.m = std::max(m, instance.capped_count() + 1);
    const QuadraticSurd maximum = smoothing_max(instance).value;
    const Rational n_big(n);
    trace.pair_bound = (maximum * (n_big * n_big) - QuadraticSurd::rational(n_big, z)) * Rational(1, 2);
    trace.pair_bound_holds = QuadraticSurd::rational(trace.pair_sum, z) <= trace.pair_bound;
  } else {
    trace.pair_bound = QuadraticSurd::rational(0, z);
  }
  return trace;
}

ColoredCompleteGraph random_coloring(int n, int k, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_coloring needs n >= 2");
  ColoredCompleteGraph coloring(n, k);
  std::mt19937_64 engine(seed);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      coloring.set_color(u, v, 1 + static_cast<Color>(uniform_below(engine, static_cast<std::uint64_t>(k))));
    }
  }
  return coloring;
}

}  // namespace mcc
