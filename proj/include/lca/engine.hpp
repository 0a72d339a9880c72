#pragma once

#include <cstdint>
#include <vector>

#include "lca/grid.hpp"
#include "lca/rules.hpp"

namespace lca {

/// One generation under a linear rule with null boundary: next(r, c) is
/// the XOR of g(r+dr, c+dc) over the rule's fundamentals, reading 0
/// outside the grid.
///
/// Works a row at a time: each fundamental contributes its source row
/// shifted by dc, XORed word-wise into the output row.
Grid step(const Grid& g, RuleNumber rule);

/// Trajectory of t+1 grids; element 0 is g.
std::vector<Grid> evolve(const Grid& g, RuleNumber rule, std::uint64_t t);

}  // namespace lca
