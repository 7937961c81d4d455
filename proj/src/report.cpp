#include "mcc/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mcc {

namespace {

NamedCheck from_inequality(std::string name, const InequalityReport& report) {
  return {std::move(name), to_string(report.lhs), to_string(report.rhs), report.holds};
}

std::string str(long long value) { return std::to_string(value); }

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.holds; });
}

VerificationReport build_report(const ColoredCompleteGraph& coloring, bool with_trace) {
  VerificationReport report;
  report.n = coloring.vertex_count();
  report.k = coloring.color_count();
  report.full = coloring.is_full();

  for (Color c = 1; c <= report.k; ++c) {
    for (const auto& component : components_of(color_class(coloring, c))) {
      if (component.edge_count == 0) continue;
      report.components.push_back({c, component.size(), component.min_vertex(), component.edge_count});
    }
  }
  if (const auto best = max_mono_component(coloring)) {
    const auto& component = best->component;
    report.largest = ComponentRow{best->color, component.size(), component.min_vertex(), component.edge_count};
  }

  const int n = report.n;
  const int k = report.k;
  if (!report.full || n < 2) return report;

  const Rational largest(report.largest->edges);
  report.density_square_bound = mcc::density_square_bound(n, k);
  report.checks.push_back(from_inequality(
      "largest_component_at_least_pairs_over_k_squared",
      InequalityReport::compare(largest, *report.density_square_bound)));
  if (k >= 2) {
    report.lower_bound = mcc::lower_bound(n, k);
    report.checks.push_back(from_inequality("largest_component_at_least_lower_bound",
                                            InequalityReport::compare(largest, *report.lower_bound)));
  }

  // The selected heavy component must carry at least C(n,2)/k^2 edges.
  try {
    const auto chosen = guaranteed_component(coloring);
    report.checks.push_back(from_inequality(
        "heavy_component_times_k_squared_at_least_pairs",
        InequalityReport::compare(Rational(BigInt(chosen.component.edge_count) * k * k),
                                  Rational(choose2(n)))));
  } catch (const std::logic_error& error) {
    report.checks.push_back({"heavy_component_times_k_squared_at_least_pairs", error.what(), "", false});
  }

  if (with_trace && k >= 2) {
    report.trace = component_trace(coloring);
    const auto& trace = *report.trace;
    const auto passing = std::count_if(trace.checks.begin(), trace.checks.end(),
                                       [](const PrefixCheck& c) { return c.holds; });
    report.checks.push_back({"red_prefix_vertex_bounds", str(passing) + " passing",
                             str(static_cast<long long>(trace.checks.size())) + " checked",
                             passing == static_cast<long long>(trace.checks.size())});
    report.checks.push_back({"red_sizes_sum_to_n", str(std::accumulate(trace.red_sizes.begin(),
                                                                        trace.red_sizes.end(), 0LL)),
                             str(n), trace.sizes_sum_to_n});
    report.checks.push_back({"red_density_times_k_at_least_one", to_string(trace.x * k), "1",
                             trace.density_at_least_inverse_k});
    report.checks.push_back({"largest_fraction_at_least_red_density_squared", to_string(trace.z),
                             to_string(trace.x * trace.x), trace.z_at_least_x_squared});
    report.checks.push_back({"red_pair_sum_within_smoothing_bound", str(trace.pair_sum),
                             trace.pair_bound.to_string(), trace.pair_bound_holds});
  }
  return report;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "coloring: n=" << report.n << " k=" << report.k << (report.full ? " (full)" : " (partial)")
      << "\n";
  out << "components with edges: " << report.components.size() << "\n";
  if (!report.components.empty()) {
    out << "  color  vertices  min_vertex  edges\n";
    for (const auto& row : report.components) {
      out << "  " << static_cast<int>(row.color) << "  " << row.vertices << "  " << row.min_vertex << "  " << row.edges
          << "\n";
    }
  }
  if (report.largest) {
    out << "largest: color " << static_cast<int>(report.largest->color) << ", " << report.largest->edges << " edges, "
        << report.largest->vertices << " vertices\n";
  }
  if (report.density_square_bound) {
    out << "bound C(n,2)/k^2: " << to_string(*report.density_square_bound) << "\n";
  }
  if (report.lower_bound) out << "lower bound: " << to_string(*report.lower_bound) << "\n";
  if (report.trace) {
    const auto& trace = *report.trace;
    out << "trace: red=" << static_cast<int>(trace.red) << " x=" << to_string(trace.x) << " z=" << to_string(trace.z)
        << " delta=" << trace.delta << " red components=" << trace.red_sizes.size() << "\n";
  }
  for (const auto& check : report.checks) {
    out << (check.holds ? "[pass] " : "[FAIL] ") << check.name << ": " << check.lhs << " vs "
        << check.rhs << "\n";
  }
  out << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

nlohmann::json render_json(const VerificationReport& report) {
  nlohmann::json out;
  out["n"] = str(report.n);
  out["k"] = str(report.k);
  out["full"] = report.full;
  out["components"] = nlohmann::json::array();
  for (const auto& row : report.components) {
    out["components"].push_back({{"color", str(row.color)},
                                 {"vertices", str(row.vertices)},
                                 {"min_vertex", str(row.min_vertex)},
                                 {"edges", str(row.edges)}});
  }
  if (report.largest) {
    out["largest"] = {{"color", str(report.largest->color)},
                      {"vertices", str(report.largest->vertices)},
                      {"min_vertex", str(report.largest->min_vertex)},
                      {"edges", str(report.largest->edges)}};
  } else {
    out["largest"] = nullptr;
  }
  out["bounds"] = nlohmann::json::object();
  if (report.density_square_bound) {
    out["bounds"]["pairs_over_k_squared"] = to_string(*report.density_square_bound);
  }
  if (report.lower_bound) out["bounds"]["lower_bound"] = to_string(*report.lower_bound);
  out["checks"] = nlohmann::json::array();
  for (const auto& check : report.checks) {
    out["checks"].push_back(
        {{"name", check.name}, {"lhs", check.lhs}, {"rhs", check.rhs}, {"holds", check.holds}});
  }
  if (report.trace) out["trace"] = to_json(*report.trace);
  out["passed"] = report.passed();
  return out;
}

nlohmann::json to_json(const InequalityReport& report) {
  return {{"lhs", to_string(report.lhs)},
          {"rhs", to_string(report.rhs)},
          {"holds", report.holds},
          {"slack", to_string(report.slack)}};
}

nlohmann::json to_json(const ComponentTrace& trace) {
  nlohmann::json out;
  out["n"] = str(trace.n);
  out["k"] = str(trace.k);
  out["red"] = str(trace.red);
  out["red_edges"] = str(trace.red_edges);
  out["max_component_edges"] = str(trace.max_component_edges);
  out["x"] = to_string(trace.x);
  out["z"] = to_string(trace.z);
  out["delta"] = trace.delta;  // diagnostic only
  out["red_sizes"] = nlohmann::json::array();
  for (int size : trace.red_sizes) out["red_sizes"].push_back(str(size));
  out["prefix_checks"] = nlohmann::json::array();
  for (const auto& check : trace.checks) {
    out["prefix_checks"].push_back({{"j", str(check.j)},
                                    {"prefix", str(check.prefix)},
                                    {"bound", check.bound.to_string()},
                                    {"bound_approx", check.bound.to_double()},
                                    {"holds", check.holds}});
  }
  out["sizes_sum_to_n"] = trace.sizes_sum_to_n;
  out["density_at_least_inverse_k"] = trace.density_at_least_inverse_k;
  out["z_at_least_x_squared"] = trace.z_at_least_x_squared;
  out["pair_sum"] = str(trace.pair_sum);
  out["pair_bound"] = trace.pair_bound.to_string();
  out["pair_bound_approx"] = trace.pair_bound.to_double();
  out["pair_bound_holds"] = trace.pair_bound_holds;
  out["passed"] = trace.passed();
  return out;
}

nlohmann::json to_json(const SearchResult& result, int n, int k) {
  std::ostringstream witness;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) witness << static_cast<int>(result.witness.color(u, v));
  }
  return {{"n", str(n)},
          {"k", str(k)},
          {"value", str(result.value)},
          {"witness", witness.str()},
          {"nodes", str(result.nodes)}};
}

nlohmann::json to_json(const Circuit& circuit, Color color) {
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex v : circuit.vertices) vertices.push_back(str(v));
  return {{"color", str(color)}, {"length", str(circuit.length())}, {"vertices", vertices}};
}

}  // namespace mcc
