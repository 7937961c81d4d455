#include "mcc/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mcc/constructions.hpp"

namespace mcc {

namespace {

// Union-find with undo for one color: union by size, no path compression,
// and an edge counter per root.
class UndoableForest {
 public:
  explicit UndoableForest(int n) : parent_(n), size_(n, 1), edges_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  // Adds edge (a, b) and returns the edge count of its component.
  int add(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) {
      history_.push_back({a, -1});
      return ++edges_[a];
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    history_.push_back({a, b});
    parent_[b] = a;
    size_[a] += size_[b];
    edges_[a] += edges_[b] + 1;
    return edges_[a];
  }

  void undo() {
    const auto [a, b] = history_.back();
    history_.pop_back();
    if (b < 0) {
      --edges_[a];
      return;
    }
    parent_[b] = b;
    size_[a] -= size_[b];
    edges_[a] -= edges_[b] + 1;
  }

 private:
  int root(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> edges_;
  std::vector<std::pair<int, int>> history_;
};

struct Prefix {
  std::vector<Color> colors;
};

class Searcher {
 public:
  Searcher(int n, int k, std::atomic<int>& incumbent)
      : n_(n), k_(k), incumbent_(incumbent), forests_(k + 1, UndoableForest(n)) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs_.push_back({u, v});
    }
    assignment_.assign(pairs_.size(), kUncolored);
  }

  int edge_total() const { return static_cast<int>(pairs_.size()); }
  long long nodes() const { return nodes_; }
  bool found() const { return found_; }
  const std::vector<Color>& first_leaf() const { return first_leaf_; }

  // Replays a prefix; false if it already reaches the incumbent.
  bool run_from(const std::vector<Color>& prefix, bool stop_at_first) {
    stop_at_first_ = stop_at_first;
    int used = 0;
    int current = 0;
    std::size_t applied = 0;
    bool alive = true;
    for (; applied < prefix.size(); ++applied) {
      const Color c = prefix[applied];
      const int count = forests_[c].add(pairs_[applied].u, pairs_[applied].v);
      assignment_[applied] = c;
      used = std::max(used, c);
      current = std::max(current, count);
      if (count >= incumbent_.load(std::memory_order_relaxed)) {
        ++applied;
        alive = false;
        break;
      }
    }
    if (alive) descend(static_cast<int>(prefix.size()), used, current);
    while (applied > 0) {
      --applied;
      forests_[assignment_[applied]].undo();
      assignment_[applied] = kUncolored;
    }
    return alive;
  }

  // Canonical prefixes of the first `depth` edges.
  static void prefixes(int k, int depth, std::vector<Color>& current, int used,
                       std::vector<Prefix>& out) {
    if (static_cast<int>(current.size()) == depth) {
      out.push_back({current});
      return;
    }
    for (Color c = 1; c <= std::min(k, used + 1); ++c) {
      current.push_back(c);
      prefixes(k, depth, current, std::max(used, c), out);
      current.pop_back();
    }
  }

 private:
  void descend(int depth, int used, int current) {
    ++nodes_;
    if (depth == edge_total()) {
      int best = incumbent_.load();
      while (current < best && !incumbent_.compare_exchange_weak(best, current)) {
      }
      if (stop_at_first_ && !found_) {
        found_ = true;
        first_leaf_ = assignment_;
      }
      return;
    }
    const auto [u, v] = pairs_[depth];
    const int limit = std::min(k_, used + 1);
    for (Color c = 1; c <= limit; ++c) {
      const int count = forests_[c].add(u, v);
      if (count < incumbent_.load(std::memory_order_relaxed)) {
        assignment_[depth] = c;
        descend(depth + 1, std::max(used, c), std::max(current, count));
        assignment_[depth] = kUncolored;
      }
      forests_[c].undo();
      if (found_) return;
    }
  }

  struct Pair {
    int u;
    int v;
  };

  int n_;
  int k_;
  std::atomic<int>& incumbent_;
  std::vector<UndoableForest> forests_;
  std::vector<Pair> pairs_;
  std::vector<Color> assignment_;
  long long nodes_ = 0;
  bool stop_at_first_ = false;
  bool found_ = false;
  std::vector<Color> first_leaf_;
};

int max_component_edges(const ColoredCompleteGraph& coloring) {
  const auto best = max_mono_component(coloring);
  return best ? static_cast<int>(best->component.edge_count) : 0;
}

ColoredCompleteGraph cyclic_coloring(int n, int k) {
  ColoredCompleteGraph coloring(n, k);
  int next = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      coloring.set_color(u, v, next + 1);
      next = (next + 1) % k;
    }
  }
  return coloring;
}

}  // namespace

SearchResult brute_force_min_max_component(int n, int k, const SearchOptions& options) {
  if (n < 2 || k < 1) throw std::invalid_argument("search needs n >= 2 and k >= 1");
  if (n > options.max_n || k > options.max_k) {
    throw std::invalid_argument("instance n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                                " exceeds the search guard (n <= " + std::to_string(options.max_n) +
                                ", k <= " + std::to_string(options.max_k) + ")");
  }

  int start = max_component_edges(cyclic_coloring(n, k));
  if (k >= 3 && is_prime(k - 1) && n >= (k - 1) * (k - 1)) {
    start = std::min(start, max_component_edges(affine_coloring(k - 1, n)));
  }

  std::atomic<int> incumbent(start);
  const int edge_total = static_cast<int>(choose2(n));
  const int jobs = std::max(1, options.jobs);

  // Enough tasks to balance the workers; a single worker takes the root.
  std::vector<Prefix> tasks;
  std::vector<Color> scratch;
  int depth = 0;
  if (jobs > 1) {
    while (depth < edge_total) {
      ++depth;
      tasks.clear();
      Searcher::prefixes(k, depth, scratch, 0, tasks);
      if (static_cast<int>(tasks.size()) >= 8 * jobs) break;
    }
  } else {
    tasks.push_back({});
  }

  std::atomic<std::size_t> next_task(0);
  std::atomic<long long> nodes(0);
  auto worker = [&] {
    Searcher searcher(n, k, incumbent);
    for (std::size_t t = next_task++; t < tasks.size(); t = next_task++) {
      searcher.run_from(tasks[t].colors, false);
    }
    nodes += searcher.nodes();
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
  }

  SearchResult result;
  result.value = incumbent.load();
  result.nodes = nodes.load();

  // Deterministic witness: first coloring in search order with max <= value.
  std::atomic<int> cutoff(result.value + 1);
  Searcher witness_search(n, k, cutoff);
  witness_search.run_from({}, true);
  if (!witness_search.found()) throw std::logic_error("search lost its witness");
  ColoredCompleteGraph witness(n, k);
  const auto& colors = witness_search.first_leaf();
  std::size_t index = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) witness.set_color(u, v, colors[index++]);
  }
  result.witness = std::move(witness);
  return result;
}

}  // namespace mcc
