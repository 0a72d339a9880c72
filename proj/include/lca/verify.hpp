#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lca/rules.hpp"

namespace lca {

struct CaseFailure {
  std::string case_id;
  std::string expected;
  std::string actual;

  friend bool operator==(const CaseFailure&, const CaseFailure&) = default;
};

/// Outcome of one verification suite. Differences that are documented in
/// the reference data are listed under expected_divergences and do not
/// count as failures.
struct VerificationReport {
  std::string suite_name;
  std::size_t cases_run = 0;
  std::vector<CaseFailure> failures;
  std::vector<std::string> expected_divergences;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::size_t, std::size_t>> dims_tested;

  bool passed() const { return failures.empty(); }
};

/// Plain-text rendering: header lines, then one line per divergence and
/// per failure, then a verdict line.
std::string render(const VerificationReport& report);

/// Seed of trial `trial` for `rule`: seed ^ trial ^ rule * 0x1000193.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial, RuleNumber rule);

/// For every rule and trial, checks matvec(rule matrix, flatten(g)) against
/// flatten(step(g)) on a random grid drawn with trial_seed().
VerificationReport verify_equivalence(std::size_t rows, std::size_t cols,
                                      const std::vector<RuleNumber>& rules, std::size_t trials,
                                      std::uint64_t seed);

/// Same check over every one of the 2^(m*n) grids. Throws CapacityError
/// when m*n > 24.
VerificationReport verify_equivalence_exhaustive(std::size_t rows, std::size_t cols,
                                                 const std::vector<RuleNumber>& rules);

/// Structural statements about the fundamental rule graphs (self-loops of
/// rule 1, edge sets, isolated vertices and weak components of rules
/// 2/4/8/16, and the four transpose pairs).
VerificationReport verify_theorems(std::size_t rows, std::size_t cols);

/// For all 512 rules: matrix equals the XOR of its fundamental matrices,
/// popcount is additive; plus disjoint supports and the transpose pairs.
VerificationReport verify_join_laws(std::size_t rows, std::size_t cols);

/// Compares the construction against the bundled reference matrices.
VerificationReport verify_golden_corpus();

/// Same, against a caller-supplied corpus in the dense text format.
VerificationReport verify_golden_corpus(std::string_view corpus_text);

/// The bundled reference corpus text.
std::string_view reference_corpus();

std::vector<RuleNumber> all_rules();

}  // namespace lca
