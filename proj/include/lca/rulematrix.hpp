#pragma once

#include <cstddef>

#include "lca/gf2.hpp"
#include "lca/rules.hpp"

namespace lca {

/// The (mn x mn) rule matrix of `rule` on an m x n grid with null
/// boundary. Row i is the target cell, column j a source cell: entry
/// (i, j) is 1 iff cell j = cell i + offset(f) for some fundamental f of
/// the rule, with both cells inside the grid. Cells are numbered
/// row-major from 0.
///
/// Throws InvalidArgument for a zero dimension, CapacityError when m*n
/// exceeds kMaxMatrixDim.
Gf2Matrix build_rule_matrix(RuleNumber rule, std::size_t rows, std::size_t cols);

/// True iff no two distinct fundamentals share a 1 entry on an m x n grid.
bool fundamental_supports_disjoint(std::size_t rows, std::size_t cols);

}  // namespace lca
