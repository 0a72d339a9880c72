#include "lca/rulematrix.hpp"

#include <string>

#include "lca/error.hpp"

namespace lca {

Gf2Matrix build_rule_matrix(RuleNumber rule, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("grid dimensions must be positive");
  if (cols > kMaxMatrixDim || rows > kMaxMatrixDim / cols) {
    throw CapacityError("rule matrix for a " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " grid exceeds dimension " + std::to_string(kMaxMatrixDim));
  }
  Gf2Matrix m(rows * cols);
  const auto fundamentals = decompose(rule);
  const auto mr = static_cast<std::ptrdiff_t>(rows);
  const auto nc = static_cast<std::ptrdiff_t>(cols);
  for (std::ptrdiff_t r = 0; r < mr; ++r) {
    for (std::ptrdiff_t c = 0; c < nc; ++c) {
      const auto target = static_cast<std::size_t>(r * nc + c);
      for (Fundamental f : fundamentals) {
        const auto [dr, dc] = offset_of(f);
        const std::ptrdiff_t sr = r + dr;
        const std::ptrdiff_t sc = c + dc;
        if (sr < 0 || sr >= mr || sc < 0 || sc >= nc) continue;
        m.set(target, static_cast<std::size_t>(sr * nc + sc), true);
      }
    }
  }
  return m;
}

bool fundamental_supports_disjoint(std::size_t rows, std::size_t cols) {
  std::vector<Gf2Matrix> parts;
  parts.reserve(kFundamentals.size());
  for (Fundamental f : kFundamentals) parts.push_back(build_rule_matrix(f, rows, cols));
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (std::size_t i = 0; i < parts[a].dim(); ++i) {
        const auto ra = parts[a].row(i);
        const auto rb = parts[b].row(i);
        for (std::size_t k = 0; k < ra.size(); ++k) {
          if (ra[k] & rb[k]) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace lca
