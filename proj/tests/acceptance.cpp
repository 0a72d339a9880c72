// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All checks are bit-exact; the two timing bounds are
// wall-clock limits.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lca/cli.hpp"
#include "lca/engine.hpp"
#include "lca/gf2.hpp"
#include "lca/graph.hpp"
#include "lca/grid.hpp"
#include "lca/rulematrix.hpp"
#include "lca/verify.hpp"
#include "lca/xorshift.hpp"

namespace {

using namespace lca;
using Clock = std::chrono::steady_clock;

constexpr double kFig2StepBudgetMs = 10.0;
constexpr double kExhaustiveBudgetS = 60.0;
// Rank of the rule-170 matrix on a 3x4 grid from an independent
// elimination script, cross-checked by counting the 4096-grid image.
constexpr std::size_t kRank170On3x4 = 12;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Grid fig2_input() { return parse_grid("0010\n1110\n1011\n"); }

Outcome fig2_cli_step() {
  Outcome o;
  const auto path = std::filesystem::temp_directory_path() / "lca_acceptance_fig2.txt";
  std::ofstream(path, std::ios::binary) << "0010\n1110\n1011\n";
  std::ostringstream out;
  std::ostringstream err;
  const std::vector<std::string> args = {"step", "--rule", "170", "--in", path.string()};
  const auto start = Clock::now();
  const int status = cli::run(args, out, err);
  const double elapsed = ms_since(start);
  std::filesystem::remove(path);
  o.require(status == 0, "exit status " + std::to_string(status));
  o.require(out.str() == "1011\n0010\n1101\n", "output was '" + out.str() + "'");
  o.require(elapsed < kFig2StepBudgetMs, "took " + std::to_string(elapsed) + " ms");
  o.detail = o.pass ? "bit-exact in " + std::to_string(elapsed) + " ms" : o.detail;
  return o;
}

Outcome fig2_matrix_path() {
  Outcome o;
  const BitVector got = matvec(build_rule_matrix(RuleNumber(170), 3, 4), BitVector{0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1, 1});
  o.require(got == BitVector{1, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1}, "matvec result differs");
  return o;
}

Outcome golden_corpus() {
  Outcome o;
  const VerificationReport r = verify_golden_corpus();
  o.require(r.passed(), std::to_string(r.failures.size()) + " unexpected differences");
  o.require(r.cases_run >= 39, "only " + std::to_string(r.cases_run) + " matrices compared");
  const std::vector<std::string> expected = {
      "M4@3x4 printed matrix differs at (0,5) (1,6) (2,5) (2,7) (3,6) (4,7) (4,9) (5,10) (6,9) (6,11) (7,10) "
      "(8,11)",
      "M290@2x2 printed matrix differs at (2,3)"};
  o.require(r.expected_divergences == expected, "documented divergences not reproduced exactly");
  if (o.pass) o.detail = std::to_string(r.cases_run) + " matrices, 2 documented divergences";
  return o;
}

Outcome exhaustive_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  const VerificationReport r = verify_equivalence_exhaustive(3, 3, all_rules());
  const double seconds = ms_since(start) / 1000.0;
  o.require(r.cases_run == 262144, "ran " + std::to_string(r.cases_run) + " cases");
  o.require(r.passed(), std::to_string(r.failures.size()) + " mismatches");
  o.require(seconds < kExhaustiveBudgetS, "took " + std::to_string(seconds) + " s");
  if (o.pass) o.detail = "262144 comparisons in " + std::to_string(seconds) + " s";
  return o;
}

Outcome theorem_suite() {
  Outcome o;
  for (std::size_t m = 1; m <= 8; ++m) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const std::string at = " at " + std::to_string(m) + "x" + std::to_string(n);
      const VerificationReport r = verify_theorems(m, n);
      o.require(r.passed(), "theorem suite failed" + at);

      const RuleGraph g1 = colored_graph(RuleNumber(1), m, n);
      o.require(stats(g1).self_loop_count == m * n && g1.edges().size() == m * n, "rule 1 loops" + at);

      const GraphStats s2 = stats(colored_graph(RuleNumber(2), m, n));
      bool rows_ok = s2.weak_components.size() == m;
      for (const auto& c : s2.weak_components) rows_ok = rows_ok && c.size() == n;
      o.require(rows_ok, "rule 2 components" + at);

      const GraphStats s8 = stats(colored_graph(RuleNumber(8), m, n));
      bool cols_ok = s8.weak_components.size() == n;
      for (const auto& c : s8.weak_components) cols_ok = cols_ok && c.size() == m;
      o.require(cols_ok, "rule 8 components" + at);

      if (m >= 2 && n >= 2) {
        const GraphStats s4 = stats(colored_graph(RuleNumber(4), m, n));
        o.require(s4.isolated == std::vector<std::size_t>{n - 1, (m - 1) * n}, "rule 4 isolated" + at);
        o.require(s4.weak_components.size() == m + n - 1, "rule 4 component count" + at);
        const GraphStats s16 = stats(colored_graph(RuleNumber(16), m, n));
        o.require(s16.isolated == std::vector<std::size_t>{0, m * n - 1}, "rule 16 isolated" + at);
      }
      for (int f : {2, 4, 8, 16}) {
        o.require(build_rule_matrix(RuleNumber(f * 16), m, n) == transpose(build_rule_matrix(RuleNumber(f), m, n)),
                  "transpose pair " + std::to_string(f) + at);
      }
    }
  }
  if (o.pass) o.detail = "64 grid shapes";
  return o;
}

Outcome join_laws() {
  Outcome o;
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 4}}) {
    const VerificationReport r = verify_join_laws(m, n);
    o.require(r.passed(), "join laws failed at " + std::to_string(m) + "x" + std::to_string(n));
    o.require(fundamental_supports_disjoint(m, n), "supports overlap");
  }
  return o;
}

Outcome linearity() {
  Outcome o;
  Xorshift64Star rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = rng.next_in(1, 8);
    const std::size_t n = rng.next_in(1, 8);
    const RuleNumber rule(static_cast<int>(rng.next_in(0, 511)));
    const Grid a = random_grid(m, n, rng.next());
    const Grid b = random_grid(m, n, rng.next());
    o.require(step(a ^ b, rule) == (step(a, rule) ^ step(b, rule)), "trial " + std::to_string(trial));
  }
  if (o.pass) o.detail = "1000 trials, seed 42";
  return o;
}

Outcome multi_step() {
  Outcome o;
  const std::vector<Grid> grids = {fig2_input(), random_grid(3, 4, 42)};
  for (int r : {1, 7, 170, 511}) {
    const RuleNumber rule(r);
    const Gf2Matrix m = build_rule_matrix(rule, 3, 4);
    for (std::uint64_t t : {0, 1, 2, 5, 8}) {
      for (const Grid& g : grids) {
        o.require(matvec(matpow(m, t), flatten(g)) == flatten(evolve(g, rule, t).back()),
                  "rule " + std::to_string(r) + " t=" + std::to_string(t));
      }
    }
  }
  return o;
}

Outcome rank_checks() {
  Outcome o;
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 1; n <= 6; ++n) {
      o.require(rank(build_rule_matrix(RuleNumber(1), m, n)) == m * n, "identity rank");
    }
  }
  o.require(rank(Gf2Matrix(12)) == 0, "zero rank");
  const std::size_t r170 = rank(build_rule_matrix(RuleNumber(170), 3, 4));
  o.require(r170 == kRank170On3x4, "rank(M170 3x4) = " + std::to_string(r170));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 worked example via CLI step", fig2_cli_step},
      {"2 worked example via rule matrix", fig2_matrix_path},
      {"3 reference matrix corpus", golden_corpus},
      {"4 exhaustive 3x3 equivalence", exhaustive_equivalence},
      {"5 structural theorems up to 8x8", theorem_suite},
      {"6 join laws at 2x2 and 3x4", join_laws},
      {"7 linearity property", linearity},
      {"8 multi-step coherence", multi_step},
      {"9 rank spot checks", rank_checks},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << name;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << '\n';
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
