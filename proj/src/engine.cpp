#include "lca/engine.hpp"

#include <array>

namespace lca {

namespace {

// out ^= src shifted so that out column c receives src column c + dc.
void xor_shifted(std::span<std::uint64_t> out, std::span<const std::uint64_t> src, int dc) {
  const std::size_t words = out.size();
  switch (dc) {
    case 0:
      for (std::size_t k = 0; k < words; ++k) out[k] ^= src[k];
      break;
    case 1:
      for (std::size_t k = 0; k < words; ++k) {
        const std::uint64_t carry = k + 1 < words ? src[k + 1] << 63 : 0;
        out[k] ^= (src[k] >> 1) | carry;
      }
      break;
    case -1:
      for (std::size_t k = 0; k < words; ++k) {
        const std::uint64_t carry = k > 0 ? src[k - 1] >> 63 : 0;
        out[k] ^= (src[k] << 1) | carry;
      }
      break;
    default:
      break;
  }
}

}  // namespace

Grid step(const Grid& g, RuleNumber rule) {
  Grid next(g.rows(), g.cols());
  const auto fundamentals = decompose(rule);
  std::array<NeighborOffset, 9> offsets{};
  for (std::size_t k = 0; k < fundamentals.size(); ++k) offsets[k] = offset_of(fundamentals[k]);

  const std::uint64_t last_mask = tail_mask(g.cols());
  const auto rows = static_cast<std::ptrdiff_t>(g.rows());
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    auto out = next.row(static_cast<std::size_t>(r));
    for (std::size_t k = 0; k < fundamentals.size(); ++k) {
      const std::ptrdiff_t src = r + offsets[k].dr;
      if (src < 0 || src >= rows) continue;
      xor_shifted(out, g.row(static_cast<std::size_t>(src)), offsets[k].dc);
    }
    // A left shift can push column n-1 into the padding.
    out.back() &= last_mask;
  }
  return next;
}

std::vector<Grid> evolve(const Grid& g, RuleNumber rule, std::uint64_t t) {
  std::vector<Grid> trajectory;
  trajectory.reserve(static_cast<std::size_t>(t) + 1);
  trajectory.push_back(g);
  for (std::uint64_t k = 0; k < t; ++k) trajectory.push_back(step(trajectory.back(), rule));
  return trajectory;
}

}  // namespace lca
