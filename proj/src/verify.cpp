#include "lca/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "lca/engine.hpp"
#include "lca/error.hpp"
#include "lca/gf2.hpp"
#include "lca/graph.hpp"
#include "lca/grid.hpp"
#include "lca/rulematrix.hpp"

namespace lca {

namespace {

std::string bits_to_string(const BitVector& v) {
  std::string s(v.size(), '0');
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) s[i] = '1';
  }
  return s;
}

std::string dims_to_string(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

template <typename Range>
std::string join_list(const Range& items) {
  std::string s = "{";
  bool first = true;
  for (const auto& x : items) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

std::string entries_to_string(const std::set<std::pair<std::size_t, std::size_t>>& entries) {
  std::string s;
  for (const auto& [i, j] : entries) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return s.empty() ? "none" : s;
}

/// Records one case; on mismatch appends a failure.
class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void check(bool ok, std::string case_id, std::string expected, std::string actual) {
    ++report_.cases_run;
    if (!ok) report_.failures.push_back({std::move(case_id), std::move(expected), std::move(actual)});
  }

  template <typename T>
  void expect_eq(const T& expected, const T& actual, std::string case_id) {
    const bool ok = expected == actual;
    check(ok, std::move(case_id), ok ? "" : describe(expected), ok ? "" : describe(actual));
  }

 private:
  static std::string describe(std::size_t x) { return std::to_string(x); }
  static std::string describe(const std::vector<std::size_t>& xs) { return join_list(xs); }
  static std::string describe(const std::set<std::pair<std::size_t, std::size_t>>& xs) {
    return entries_to_string(xs);
  }

  VerificationReport& report_;
};

using EntrySet = std::set<std::pair<std::size_t, std::size_t>>;

VerificationReport new_report(std::string name, std::uint64_t seed = 0) {
  VerificationReport r;
  r.suite_name = std::move(name);
  r.seed = seed;
  return r;
}

VerificationReport new_report(std::string name, std::size_t rows, std::size_t cols, std::uint64_t seed = 0) {
  VerificationReport r = new_report(std::move(name), seed);
  r.dims_tested.emplace_back(rows, cols);
  return r;
}

EntrySet edge_set(const RuleGraph& g) {
  EntrySet s;
  for (const Edge& e : g.edges()) s.emplace(e.source, e.target);
  return s;
}

std::vector<std::size_t> component_sizes(const GraphStats& s) {
  std::vector<std::size_t> sizes;
  for (const auto& c : s.weak_components) sizes.push_back(c.size());
  return sizes;
}

}  // namespace

std::string render(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite: " << report.suite_name << '\n';
  os << "dims:";
  if (report.dims_tested.empty()) os << " -";
  for (const auto& [m, n] : report.dims_tested) os << ' ' << dims_to_string(m, n);
  os << '\n';
  os << "seed: " << report.seed << '\n';
  os << "cases run: " << report.cases_run << '\n';
  for (const std::string& d : report.expected_divergences) os << "expected divergence: " << d << '\n';
  for (const CaseFailure& f : report.failures) {
    os << "FAIL " << f.case_id << ": expected " << f.expected << ", actual " << f.actual << '\n';
  }
  os << "result: " << (report.passed() ? "PASS" : "FAIL") << " (" << report.failures.size() << " failures)\n";
  return std::move(os).str();
}

std::vector<RuleNumber> all_rules() {
  std::vector<RuleNumber> rules;
  rules.reserve(RuleNumber::kMax + 1);
  for (int r = 0; r <= RuleNumber::kMax; ++r) rules.emplace_back(r);
  return rules;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, RuleNumber rule) {
  return seed ^ trial ^ (static_cast<std::uint64_t>(rule.value()) * 0x1000193ULL);
}

VerificationReport verify_equivalence(std::size_t rows, std::size_t cols, const std::vector<RuleNumber>& rules,
                                      std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  VerificationReport report = new_report("equivalence", rows, cols, seed);
  Recorder rec(report);
  std::vector<RuleNumber> sorted = rules;
  std::ranges::sort(sorted);
  for (RuleNumber rule : sorted) {
    const Gf2Matrix m = build_rule_matrix(rule, rows, cols);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = trial_seed(seed, t, rule);
      const Grid g = random_grid(rows, cols, s);
      const BitVector via_matrix = matvec(m, flatten(g));
      const BitVector via_step = flatten(step(g, rule));
      const bool ok = via_matrix == via_step;
      rec.check(ok, "rule " + std::to_string(rule.value()) + " trial " + std::to_string(t) + " seed " +
                        std::to_string(s),
                ok ? "" : bits_to_string(via_step), ok ? "" : bits_to_string(via_matrix));
    }
  }
  return report;
}

VerificationReport verify_equivalence_exhaustive(std::size_t rows, std::size_t cols,
                                                 const std::vector<RuleNumber>& rules) {
  const std::size_t cells = rows * cols;
  if (cells > 24) throw CapacityError("exhaustive equivalence is limited to 24 cells");
  VerificationReport report = new_report("equivalence-exhaustive", rows, cols);
  Recorder rec(report);
  std::vector<RuleNumber> sorted = rules;
  std::ranges::sort(sorted);
  const std::uint64_t grids = std::uint64_t{1} << cells;
  for (RuleNumber rule : sorted) {
    const Gf2Matrix m = build_rule_matrix(rule, rows, cols);
    BitVector v(cells);
    for (std::uint64_t pattern = 0; pattern < grids; ++pattern) {
      v.words()[0] = pattern;
      const Grid g = unflatten(v, rows, cols);
      const BitVector via_matrix = matvec(m, v);
      const BitVector via_step = flatten(step(g, rule));
      const bool ok = via_matrix == via_step;
      rec.check(ok, "rule " + std::to_string(rule.value()) + " grid " + bits_to_string(v),
                ok ? "" : bits_to_string(via_step), ok ? "" : bits_to_string(via_matrix));
    }
  }
  return report;
}

VerificationReport verify_theorems(std::size_t rows, std::size_t cols) {
  VerificationReport report = new_report("theorems", rows, cols);
  Recorder rec(report);
  const std::size_t m = rows;
  const std::size_t n = cols;
  const std::size_t d = m * n;
  const std::string at = " @" + dims_to_string(m, n);
  const bool interior_claims = m >= 2 && n >= 2;

  auto graph_of = [&](Fundamental f) { return colored_graph(f, m, n); };

  // Rule 1: a self-loop on every vertex and nothing else.
  {
    const RuleGraph g = graph_of(Fundamental::kSelf);
    EntrySet expected;
    for (std::size_t i = 0; i < d; ++i) expected.emplace(i, i);
    rec.expect_eq(expected, edge_set(g), "rule1.edges" + at);
    rec.expect_eq(d, stats(g).self_loop_count, "rule1.self_loops" + at);
  }

  // Rule 2: i -> i+1 within each row; m components of n vertices.
  {
    const RuleGraph g = graph_of(Fundamental::kRight);
    EntrySet expected;
    for (std::size_t i = 0; i < d; ++i) {
      if (i % n != n - 1) expected.emplace(i, i + 1);
    }
    rec.expect_eq(expected, edge_set(g), "rule2.edges" + at);
    rec.expect_eq(std::vector<std::size_t>(m, n), component_sizes(stats(g)), "rule2.component_sizes" + at);
  }

  // Rule 4: i -> i+n+1 off the last row and column; corner isolation and
  // one component per down-right diagonal.
  {
    const RuleGraph g = graph_of(Fundamental::kBottomRight);
    EntrySet expected;
    for (std::size_t i = 0; i < d; ++i) {
      if (i / n < m - 1 && i % n < n - 1) expected.emplace(i, i + n + 1);
    }
    rec.expect_eq(expected, edge_set(g), "rule4.edges" + at);
    if (interior_claims) {
      const GraphStats s = stats(g);
      rec.expect_eq(std::vector<std::size_t>{n - 1, (m - 1) * n}, s.isolated, "rule4.isolated" + at);
      rec.expect_eq(m + n - 1, s.weak_components.size(), "rule4.component_count" + at);
    }
  }

  // Rule 8: i -> i+n above the last row; n components of m vertices.
  {
    const RuleGraph g = graph_of(Fundamental::kBottom);
    EntrySet expected;
    for (std::size_t i = 0; i + n < d; ++i) expected.emplace(i, i + n);
    rec.expect_eq(expected, edge_set(g), "rule8.edges" + at);
    rec.expect_eq(std::vector<std::size_t>(n, m), component_sizes(stats(g)), "rule8.component_sizes" + at);
  }

  // Rule 16: i -> i+n-1 off the last row and first column; first and last
  // vertices isolated.
  {
    const RuleGraph g = graph_of(Fundamental::kBottomLeft);
    EntrySet expected;
    for (std::size_t i = 0; i < d; ++i) {
      if (i / n < m - 1 && i % n > 0) expected.emplace(i, i + n - 1);
    }
    rec.expect_eq(expected, edge_set(g), "rule16.edges" + at);
    if (interior_claims) {
      rec.expect_eq(std::vector<std::size_t>{0, d - 1}, stats(g).isolated, "rule16.isolated" + at);
    }
  }

  // Transpose pairs: matrices are transposes, graphs are edge reversals.
  for (Fundamental f : {Fundamental::kRight, Fundamental::kBottomRight, Fundamental::kBottom,
                        Fundamental::kBottomLeft}) {
    const Fundamental p = transpose_partner(f);
    const std::string id = "transpose." + std::to_string(weight(p)) + "=" + std::to_string(weight(f)) + "^T" + at;
    const Gf2Matrix mf = build_rule_matrix(f, m, n);
    const Gf2Matrix mp = build_rule_matrix(p, m, n);
    rec.check(transpose(mf) == mp, id, "transpose equal", "differs");
    EntrySet reversed;
    for (const auto& [s, t] : edge_set(graph_of(f))) reversed.emplace(t, s);
    rec.expect_eq(reversed, edge_set(graph_of(p)), "reversal." + std::to_string(weight(p)) + at);
  }
  return report;
}

VerificationReport verify_join_laws(std::size_t rows, std::size_t cols) {
  VerificationReport report = new_report("join", rows, cols);
  Recorder rec(report);
  const std::string at = " @" + dims_to_string(rows, cols);

  std::vector<Gf2Matrix> parts;
  std::vector<std::size_t> part_counts;
  for (Fundamental f : kFundamentals) {
    parts.push_back(build_rule_matrix(f, rows, cols));
    part_counts.push_back(popcount(parts.back()));
  }
  rec.check(fundamental_supports_disjoint(rows, cols), "supports_disjoint" + at, "true", "false");

  for (RuleNumber rule : all_rules()) {
    const Gf2Matrix built = build_rule_matrix(rule, rows, cols);
    Gf2Matrix joined(rows * cols);
    std::size_t count_sum = 0;
    for (std::size_t k = 0; k < kFundamentals.size(); ++k) {
      if (!rule.contains(kFundamentals[k])) continue;
      joined ^= parts[k];
      count_sum += part_counts[k];
    }
    const std::string id = "rule" + std::to_string(rule.value());
    rec.check(built == joined, id + ".decomposition" + at, "XOR of fundamentals", "differs");
    rec.expect_eq(count_sum, popcount(built), id + ".popcount" + at);
  }

  for (Fundamental f : {Fundamental::kRight, Fundamental::kBottomRight, Fundamental::kBottom,
                        Fundamental::kBottomLeft}) {
    const Fundamental p = transpose_partner(f);
    rec.check(transpose(build_rule_matrix(f, rows, cols)) == build_rule_matrix(p, rows, cols),
              "transpose." + std::to_string(weight(p)) + at, "transpose of rule " + std::to_string(weight(f)),
              "differs");
  }
  return report;
}

VerificationReport verify_golden_corpus(std::string_view corpus_text) {
  VerificationReport report = new_report("golden");
  Recorder rec(report);

  struct Block {
    MatrixHeader header;
    std::size_t line_no = 0;
    EntrySet expected_diff;
    std::vector<std::string> rows;
  };
  std::vector<Block> blocks;

  std::istringstream in{std::string(corpus_text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.rfind("# rule ", 0) == 0 || line.rfind("# dim ", 0) == 0) {
      blocks.push_back({parse_header(line, line_no), line_no, {}, {}});
      if (!blocks.back().header.has_rule()) throw ParseError(line_no, "reference matrix needs a rule header");
      continue;
    }
    if (line.rfind("# expect-diff ", 0) == 0) {
      if (blocks.empty() || !blocks.back().rows.empty()) throw ParseError(line_no, "expect-diff outside a header");
      std::istringstream fields(line.substr(14));
      std::size_t i = 0;
      std::size_t j = 0;
      if (!(fields >> i >> j)) throw ParseError(line_no, "malformed expect-diff");
      blocks.back().expected_diff.emplace(i, j);
      continue;
    }
    if (line[0] == '#') continue;
    if (blocks.empty()) throw ParseError(line_no, "matrix row before any header");
    Block& b = blocks.back();
    if (line.size() != b.header.dim || line.find_first_not_of("01") != std::string::npos) {
      throw ParseError(line_no, "expected " + std::to_string(b.header.dim) + " characters of 0/1");
    }
    if (b.rows.size() == b.header.dim) throw ParseError(line_no, "too many matrix rows");
    b.rows.push_back(line);
  }

  std::set<std::pair<std::size_t, std::size_t>> dims;
  for (const Block& b : blocks) {
    if (b.rows.size() != b.header.dim) throw ParseError(b.line_no, "matrix has too few rows");
    const MatrixHeader& h = b.header;
    dims.emplace(h.rows, h.cols);
    const Gf2Matrix built = build_rule_matrix(RuleNumber(h.rule), h.rows, h.cols);
    EntrySet diff;
    for (std::size_t i = 0; i < h.dim; ++i) {
      for (std::size_t j = 0; j < h.dim; ++j) {
        if (built.get(i, j) != (b.rows[i][j] == '1')) diff.emplace(i, j);
      }
    }
    const std::string id = "M" + std::to_string(h.rule) + "@" + dims_to_string(h.rows, h.cols);
    rec.expect_eq(b.expected_diff, diff, id);
    if (!b.expected_diff.empty() && diff == b.expected_diff) {
      report.expected_divergences.push_back(id + " printed matrix differs at " + entries_to_string(diff));
    }
  }
  report.dims_tested.assign(dims.begin(), dims.end());
  return report;
}

VerificationReport verify_golden_corpus() { return verify_golden_corpus(reference_corpus()); }

}  // namespace lca
