#include "lca/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <vector>

#include "lca/engine.hpp"
#include "lca/error.hpp"
#include "lca/gf2.hpp"
#include "lca/graph.hpp"
#include "lca/grid.hpp"
#include "lca/rulematrix.hpp"
#include "lca/rules.hpp"
#include "lca/verify.hpp"

namespace lca::cli {

namespace {

std::string_view position_name(Fundamental f) {
  switch (f) {
    case Fundamental::kSelf: return "centre";
    case Fundamental::kRight: return "right";
    case Fundamental::kBottomRight: return "bottom-right";
    case Fundamental::kBottom: return "bottom";
    case Fundamental::kBottomLeft: return "bottom-left";
    case Fundamental::kLeft: return "left";
    case Fundamental::kTopLeft: return "top-left";
    case Fundamental::kTop: return "top";
    case Fundamental::kTopRight: return "top-right";
  }
  return "?";
}

std::string signed_str(int x) { return x > 0 ? "+" + std::to_string(x) : std::to_string(x); }

template <typename T>
std::string space_list(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

Grid read_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return parse_grid(in);
}

/// Writes `text` to `path`, or to `out` when no path is given.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + path + "'");
  file << text;
}

void print_info(RuleNumber rule, std::ostream& out) {
  const auto parts = decompose(rule);
  out << "rule: " << rule.value() << '\n';
  std::string binary(9, '0');
  for (int k = 0; k < 9; ++k) {
    if (rule.value() & (1 << k)) binary[8 - k] = '1';
  }
  out << "binary: " << binary << '\n';
  out << rule.value() << " =";
  if (parts.empty()) out << " 0";
  for (std::size_t k = 0; k < parts.size(); ++k) out << (k ? " + " : " ") << weight(parts[k]);
  out << '\n';
  out << "fundamental  position      offset(dr,dc)  partner\n";
  for (Fundamental f : parts) {
    const auto [dr, dc] = offset_of(f);
    std::ostringstream row;
    row << std::left;
    row.width(13);
    row << weight(f);
    row.width(14);
    row << position_name(f);
    row.width(15);
    row << "(" + signed_str(dr) + "," + signed_str(dc) + ")";
    row << weight(transpose_partner(f));
    out << row.str() << '\n';
  }
  out << "transpose partner rule: " << transpose_partner(rule).value() << '\n';
}

void print_analysis(RuleNumber rule, std::size_t rows, std::size_t cols, std::ostream& out) {
  const Gf2Matrix m = build_rule_matrix(rule, rows, cols);
  const RuleGraph g = colored_graph(rule, rows, cols);
  const GraphStats s = stats(g);
  const std::size_t r = rank(m);
  out << "rule " << rule.value() << " on " << rows << "x" << cols << " grid: " << g.vertex_count()
      << " vertices, " << g.edges().size() << " edges\n";
  out << "self-loops: " << s.self_loop_count << '\n';
  out << "isolated: " << (s.isolated.empty() ? "none" : space_list(s.isolated)) << '\n';
  out << "weak components: " << s.weak_components.size() << '\n';
  for (const auto& c : s.weak_components) out << "  {" << space_list(c) << "}\n";
  out << "out-degrees: " << space_list(s.out_degrees) << '\n';
  out << "in-degrees: " << space_list(s.in_degrees) << '\n';
  out << "popcount: " << popcount(m) << '\n';
  out << "rank: " << r << '\n';
  out << "invertible: " << (r == m.dim() ? "yes" : "no") << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear rules of two-dimensional nine-neighbourhood cellular automata", "lca"};
  app.require_subcommand(1);

  int rule = 0;
  std::string in_path;
  std::string out_path;
  std::uint64_t steps = 0;
  bool all_generations = false;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string format = "dense";
  std::string dot_path;
  bool uncolored = false;
  std::string suite = "all";
  std::size_t trials = 8;
  std::uint64_t seed = 42;

  const auto rule_range = CLI::Range(0, RuleNumber::kMax);
  const auto dim_range = CLI::Range(std::size_t{1}, kMaxCells);

  auto* info = app.add_subcommand("info", "Describe a rule number");
  info->add_option("rule", rule, "Rule number (0-511)")->required()->check(rule_range);

  auto* step_cmd = app.add_subcommand("step", "Advance a grid by one generation");
  step_cmd->add_option("--rule", rule, "Rule number (0-511)")->required()->check(rule_range);
  step_cmd->add_option("--in", in_path, "Input grid (plain or PBM P1)")->required();
  step_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* evolve_cmd = app.add_subcommand("evolve", "Advance a grid by several generations");
  evolve_cmd->add_option("--rule", rule, "Rule number (0-511)")->required()->check(rule_range);
  evolve_cmd->add_option("--in", in_path, "Input grid (plain or PBM P1)")->required();
  evolve_cmd->add_option("--steps", steps, "Number of generations")->required();
  evolve_cmd->add_flag("--all", all_generations, "Print every generation, separated by blank lines");

  auto* matrix_cmd = app.add_subcommand("matrix", "Print the rule matrix");
  matrix_cmd->add_option("--rule", rule, "Rule number (0-511)")->required()->check(rule_range);
  matrix_cmd->add_option("--rows", rows, "Grid rows")->required()->check(dim_range);
  matrix_cmd->add_option("--cols", cols, "Grid columns")->required()->check(dim_range);
  matrix_cmd->add_option("--format", format, "dense or coords")->check(CLI::IsMember({"dense", "coords"}));
  matrix_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* graph_cmd = app.add_subcommand("graph", "Emit the rule graph as Graphviz DOT");
  graph_cmd->add_option("--rule", rule, "Rule number (0-511)")->required()->check(rule_range);
  graph_cmd->add_option("--rows", rows, "Grid rows")->required()->check(dim_range);
  graph_cmd->add_option("--cols", cols, "Grid columns")->required()->check(dim_range);
  graph_cmd->add_option("--dot", dot_path, "Output file (default: stdout)");
  graph_cmd->add_flag("--uncolored", uncolored, "Drop edge colours");

  auto* analyze_cmd = app.add_subcommand("analyze", "Graph statistics, rank and invertibility");
  analyze_cmd->add_option("--rule", rule, "Rule number (0-511)")->required()->check(rule_range);
  analyze_cmd->add_option("--rows", rows, "Grid rows")->required()->check(dim_range);
  analyze_cmd->add_option("--cols", cols, "Grid columns")->required()->check(dim_range);

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--rows", rows, "Grid rows")->required()->check(dim_range);
  verify_cmd->add_option("--cols", cols, "Grid columns")->required()->check(dim_range);
  verify_cmd->add_option("--suite", suite, "equivalence, theorems, join, golden or all")
      ->check(CLI::IsMember({"equivalence", "theorems", "join", "golden", "all"}));
  verify_cmd->add_option("--trials", trials, "Random grids per rule")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Generator seed");

  // CLI11 consumes the argument vector back to front.
  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) {
      print_info(RuleNumber(rule), out);
    } else if (step_cmd->parsed()) {
      emit(serialize_grid(step(read_grid_file(in_path), RuleNumber(rule))), out_path, out);
    } else if (evolve_cmd->parsed()) {
      const auto trajectory = evolve(read_grid_file(in_path), RuleNumber(rule), steps);
      if (!all_generations) {
        out << serialize_grid(trajectory.back());
      } else {
        for (std::size_t k = 0; k < trajectory.size(); ++k) out << (k ? "\n" : "") << serialize_grid(trajectory[k]);
      }
    } else if (matrix_cmd->parsed()) {
      const Gf2Matrix m = build_rule_matrix(RuleNumber(rule), rows, cols);
      std::ostringstream os;
      write_matrix(os, m, MatrixHeader{.dim = m.dim(), .rule = rule, .rows = rows, .cols = cols},
                   format == "coords" ? MatrixFormat::kCoords : MatrixFormat::kDense);
      emit(os.str(), out_path, out);
    } else if (graph_cmd->parsed()) {
      const RuleGraph g = colored_graph(RuleNumber(rule), rows, cols);
      emit(to_dot(uncolored ? g.uncolored() : g), dot_path, out);
    } else if (analyze_cmd->parsed()) {
      print_analysis(RuleNumber(rule), rows, cols, out);
    } else if (verify_cmd->parsed()) {
      std::vector<std::function<VerificationReport()>> suites;
      if (suite == "equivalence" || suite == "all") {
        suites.emplace_back([&] { return verify_equivalence(rows, cols, all_rules(), trials, seed); });
      }
      if (suite == "theorems" || suite == "all") suites.emplace_back([&] { return verify_theorems(rows, cols); });
      if (suite == "join" || suite == "all") suites.emplace_back([&] { return verify_join_laws(rows, cols); });
      if (suite == "golden" || suite == "all") suites.emplace_back([] { return verify_golden_corpus(); });
      bool clean = true;
      for (std::size_t k = 0; k < suites.size(); ++k) {
        const VerificationReport report = suites[k]();
        out << (k ? "\n" : "") << render(report);
        clean = clean && report.passed();
      }
      return clean ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace lca::cli
