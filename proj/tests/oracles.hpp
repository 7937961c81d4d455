#pragma once

// Independent reference implementations used only by tests. They share no
// code paths with the library routines they check.

#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <vector>

#include "mcc/bounds.hpp"
#include "mcc/graph_core.hpp"

namespace oracle {

struct PlainComponent {
  std::vector<int> vertices;
  long long edges = 0;
  bool operator==(const PlainComponent&) const = default;
};

// BFS over an adjacency matrix, components ordered by smallest vertex.
inline std::vector<PlainComponent> components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n + 1, std::vector<int>(n + 1, 0));
  for (auto [u, v] : edges) {
    adj[u][v] += 1;
    adj[v][u] += 1;
  }
  std::vector<int> label(n + 1, -1);
  std::vector<PlainComponent> out;
  for (int s = 1; s <= n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(s);
    label[s] = id;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      out[id].vertices.push_back(v);
      for (int w = 1; w <= n; ++w) {
        if (adj[v][w] && label[w] < 0) {
          label[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(out[id].vertices.begin(), out[id].vertices.end());
  }
  for (auto [u, v] : edges) out[label[u]].edges += 1;
  return out;
}

// Part index per vertex for contiguous blocks.
inline std::vector<int> part_labels(const std::vector<int>& sizes) {
  std::vector<int> label{-1};
  for (int i = 0; i < static_cast<int>(sizes.size()); ++i) label.insert(label.end(), sizes[i], i);
  return label;
}

// Direct enumeration of ordered pairs with endpoints in different parts.
inline long long pair_count(const std::vector<int>& sizes, const std::vector<int>& s,
                            const std::vector<int>& t) {
  const auto label = part_labels(sizes);
  long long count = 0;
  for (int a : s) {
    for (int b : t) {
      if (label[a] != label[b]) ++count;
    }
  }
  return count;
}

// Largest monochromatic component edge count of a color vector in
// lexicographic pair order.
inline long long max_component(int n, int k, const std::vector<int>& colors) {
  long long best = 0;
  for (int c = 1; c <= k; ++c) {
    std::vector<std::pair<int, int>> edges;
    std::size_t index = 0;
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v, ++index) {
        if (colors[index] == c) edges.push_back({u, v});
      }
    }
    for (const auto& comp : components(n, edges)) best = std::max(best, comp.edges);
  }
  return best;
}

// Min over every k-coloring (no pruning, no relabeling) of the largest
// monochromatic component.
inline long long min_max_component(int n, int k) {
  const int pairs = n * (n - 1) / 2;
  std::vector<int> colors(pairs, 1);
  long long best = pairs;
  while (true) {
    best = std::min(best, max_component(n, k, colors));
    int i = 0;
    while (i < pairs && colors[i] == k) colors[i++] = 1;
    if (i == pairs) break;
    ++colors[i];
  }
  return best;
}

inline mcc::ColoredCompleteGraph from_colors(int n, int k, const std::vector<int>& colors) {
  mcc::ColoredCompleteGraph g(n, k);
  std::size_t index = 0;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.set_color(u, v, colors[index++]);
  }
  return g;
}

// Vertices of the smoothing polytope {v_1 >= ... >= v_m >= 0, sum v = 1,
// prefix sums below the instance bounds}, by solving every choice of m-1
// tight inequalities together with the sum constraint. All coefficients are
// rational, so elimination only divides by rationals.
inline std::vector<std::vector<mcc::QuadraticSurd>> smoothing_vertices(const mcc::SmoothingInstance& inst) {
  using mcc::QuadraticSurd;
  using mcc::Rational;
  const int m = inst.m;
  const auto zero = QuadraticSurd::rational(0, inst.z);
  struct Row {
    std::vector<Rational> a;
    QuadraticSurd b;
  };
  std::vector<Row> ineq;
  for (int i = 0; i + 1 < m; ++i) {
    Row r{std::vector<Rational>(m, 0), zero};
    r.a[i + 1] = 1;
    r.a[i] = -1;
    ineq.push_back(r);
  }
  {
    Row r{std::vector<Rational>(m, 0), zero};
    r.a[m - 1] = -1;
    ineq.push_back(r);
  }
  for (int j = 1; j <= m - 1; ++j) {
    Row r{std::vector<Rational>(m, 0), inst.prefix_bound(j)};
    for (int i = 0; i < j; ++i) r.a[i] = 1;
    ineq.push_back(r);
  }
  const int total = static_cast<int>(ineq.size());
  std::vector<std::vector<QuadraticSurd>> out;
  std::vector<int> pick(m - 1);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == m - 1) {
      std::vector<Row> sys;
      for (int i : pick) sys.push_back(ineq[i]);
      sys.push_back({std::vector<Rational>(m, 1), QuadraticSurd::rational(1, inst.z)});
      for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int r = col; r < m; ++r) {
          if (sys[r].a[col] != 0) {
            pivot = r;
            break;
          }
        }
        if (pivot < 0) return;  // singular
        std::swap(sys[col], sys[pivot]);
        const Rational inv = Rational(1) / sys[col].a[col];
        for (auto& x : sys[col].a) x *= inv;
        sys[col].b *= inv;
        for (int r = 0; r < m; ++r) {
          if (r == col || sys[r].a[col] == 0) continue;
          const Rational f = sys[r].a[col];
          for (int c = 0; c < m; ++c) sys[r].a[c] -= f * sys[col].a[c];
          sys[r].b -= sys[col].b * f;
        }
      }
      std::vector<QuadraticSurd> v;
      for (const auto& r : sys) v.push_back(r.b);
      for (const auto& r : ineq) {
        QuadraticSurd lhs = zero;
        for (int i = 0; i < m; ++i) lhs += v[i] * r.a[i];
        if (r.b < lhs) return;
      }
      out.push_back(std::move(v));
      return;
    }
    for (int i = start; i < total; ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return out;
}

}  // namespace oracle
