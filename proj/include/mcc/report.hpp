#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcc/bounds.hpp"
#include "mcc/euler.hpp"
#include "mcc/graph_core.hpp"
#include "mcc/inequality.hpp"
#include "mcc/search.hpp"

namespace mcc {

struct ComponentRow {
  Color color = kUncolored;
  int vertices = 0;
  Vertex min_vertex = 0;
  long long edges = 0;
};

/// One verified claim, rendered as exact strings.
struct NamedCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool holds = false;
};

/**
 * Everything `verify` recomputes from a coloring: the edge-bearing
 * components of every color, the largest one, the bound values, and the
 * pass/fail status of each bound the largest component must meet. Bound
 * checks apply to full colorings only.
 */
struct VerificationReport {
  int n = 0;
  int k = 0;
  bool full = false;
  std::vector<ComponentRow> components;
  std::optional<ComponentRow> largest;
  std::optional<Rational> density_square_bound;
  std::optional<Rational> lower_bound;
  std::vector<NamedCheck> checks;
  std::optional<ComponentTrace> trace;

  bool passed() const;
};

VerificationReport build_report(const ColoredCompleteGraph& coloring, bool with_trace);

std::string render_text(const VerificationReport& report);
nlohmann::json render_json(const VerificationReport& report);

nlohmann::json to_json(const InequalityReport& report);
nlohmann::json to_json(const ComponentTrace& trace);
nlohmann::json to_json(const SearchResult& result, int n, int k);
nlohmann::json to_json(const Circuit& circuit, Color color);

}  // namespace mcc
