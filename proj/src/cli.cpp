#include "mcc/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mcc/bounds.hpp"
#include "mcc/coloring_io.hpp"
#include "mcc/constructions.hpp"
#include "mcc/euler.hpp"
#include "mcc/report.hpp"
#include "mcc/search.hpp"

namespace mcc::cli {

namespace {

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != field.size()) throw std::invalid_argument("bad part size '" + field + "'");
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("--parts is empty");
  return parts;
}

void emit(const ColoredCompleteGraph& coloring, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    write_coloring(out, coloring);
    return;
  }
  std::ofstream file(output);
  if (!file) throw std::runtime_error("cannot write " + output);
  write_coloring(file, coloring);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic component bounds, constructions and search", "mcc"};
  app.require_subcommand(1);

  std::string output;
  int n = 0, k = 0, q = 0, jobs = 1, max_n = 7, max_k = 3, color = 0;
  std::uint64_t seed = 0;
  std::string parts_text, input;
  bool initial = false, json = false, with_trace = false;

  auto* gen = app.add_subcommand("gen", "generate a coloring");
  gen->require_subcommand(1);
  gen->add_option("--output,-o", output, "write to a file instead of stdout");
  auto* gen_k3 = gen->add_subcommand("k3", "four-part three-coloring of K_n (n >= 46)");
  gen_k3->add_option("--n", n)->required();
  gen_k3->add_flag("--initial", initial, "skip the exchange optimization");
  auto* gen_affine = gen->add_subcommand("affine", "affine-plane (q+1)-coloring");
  gen_affine->add_option("--q", q)->required();
  gen_affine->add_option("--n", n)->required();
  auto* gen_random = gen->add_subcommand("random", "uniform random coloring");
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--k", k)->required();
  gen_random->add_option("--seed", seed)->required();
  auto* gen_split = gen->add_subcommand("density-split", "sliced multipartite subgraph as a 1-coloring");
  gen_split->add_option("--parts", parts_text)->required();
  gen_split->add_option("--k", k)->required();
  for (auto* sub : {gen_k3, gen_affine, gen_random, gen_split}) sub->fallthrough();

  auto* verify = app.add_subcommand("verify", "recompute components and check the bounds");
  verify->add_option("--input", input)->required();
  verify->add_flag("--trace", with_trace, "include the red-component trace");
  verify->add_flag("--json", json);

  auto* bound = app.add_subcommand("bound", "guaranteed largest component size");
  bound->add_option("--n", n)->required();
  bound->add_option("--k", k)->required();
  bound->add_flag("--json", json);

  auto* search = app.add_subcommand("search", "exact min-max component by exhaustive search");
  search->add_option("--n", n)->required();
  search->add_option("--k", k)->required();
  search->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  search->add_option("--max-n", max_n, "feasibility guard on n");
  search->add_option("--max-k", max_k, "feasibility guard on k");

  auto* trace = app.add_subcommand("trace", "red-component prefix diagnostics (JSON)");
  trace->add_option("--input", input)->required();

  auto* circuit = app.add_subcommand("circuit", "longest monochromatic circuit after parity fixing");
  circuit->add_option("--input", input)->required();
  circuit->add_option("--color", color);
  circuit->add_flag("--json", json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_k3->parsed()) {
        const auto nice = k3_initial_nice(n);
        emit(initial ? nice : k3_optimize(nice), output, out);
      } else if (gen_affine->parsed()) {
        emit(affine_coloring(q, n), output, out);
      } else if (gen_random->parsed()) {
        emit(random_coloring(n, k, seed), output, out);
      } else {
        const MultipartiteHost host(parse_parts(parts_text));
        emit(subgraph_as_coloring(density_split(host, k)), output, out);
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto report = build_report(read_coloring_file(input), with_trace);
      if (json) {
        out << render_json(report).dump(2) << "\n";
      } else {
        out << render_text(report);
      }
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
    if (bound->parsed()) {
      const Rational value = lower_bound(n, k);
      if (json) {
        out << nlohmann::json{{"n", std::to_string(n)}, {"k", std::to_string(k)},
                              {"lower_bound", to_string(value)}}.dump(2)
            << "\n";
      } else {
        out << to_string(value) << "\n";
      }
      return kExitOk;
    }
    if (search->parsed()) {
      SearchOptions options;
      options.jobs = jobs;
      options.max_n = max_n;
      options.max_k = max_k;
      const auto result = brute_force_min_max_component(n, k, options);
      out << to_json(result, n, k).dump(2) << "\n";
      return kExitOk;
    }
    if (trace->parsed()) {
      const auto result = component_trace(read_coloring_file(input));
      out << to_json(result).dump(2) << "\n";
      return result.passed() ? kExitOk : kExitCheckFailed;
    }
    if (circuit->parsed()) {
      const auto coloring = read_coloring_file(input);
      Color best_color = 0;
      Circuit best;
      std::vector<ColorCircuitStats> stats;
      if (color < 0 || color > coloring.color_count()) {
        throw std::out_of_range("--color must be in 1.." + std::to_string(coloring.color_count()));
      }
      if (color != 0) {
        ColorCircuitStats one;
        one.color = color;
        best = longest_class_circuit(color_class(coloring, color), one);
        best_color = color;
        stats.push_back(one);
      } else {
        auto all = best_mono_circuit(coloring);
        best = std::move(all.circuit);
        best_color = all.color;
        stats = std::move(all.per_color);
      }
      bool valid = true;
      for (const auto& s : stats) valid = valid && s.trimmed_even && s.removed_acyclic && s.circuits_valid;
      if (json) {
        auto body = to_json(best, best_color);
        body["valid"] = valid;
        body["removed"] = nlohmann::json::array();
        for (const auto& s : stats) {
          body["removed"].push_back({{"color", std::to_string(s.color)},
                                     {"edges", std::to_string(s.removed_edges)}});
        }
        out << body.dump(2) << "\n";
      } else {
        out << "color " << static_cast<int>(best_color) << " length " << best.length() << "\n";
        for (std::size_t i = 0; i < best.vertices.size(); ++i) {
          out << (i ? " " : "") << best.vertices[i];
        }
        out << "\n";
      }
      return valid ? kExitOk : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    err << "error: " << input << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // invalid_argument and out_of_range are usage problems; a bare logic_error
    // is a failed internal check.
    err << "error: " << e.what() << "\n";
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      return kExitUsage;
    }
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mcc::cli
