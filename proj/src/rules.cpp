#include "lca/rules.hpp"

#include <bit>
#include <string>

#include "lca/error.hpp"

namespace lca {

Fundamental fundamental_from_weight(int w) {
  if (w < 1 || w > 256 || !std::has_single_bit(static_cast<unsigned>(w))) {
    throw InvalidArgument("not a fundamental rule weight: " + std::to_string(w));
  }
  return static_cast<Fundamental>(w);
}

RuleNumber::RuleNumber(int value) : value_(static_cast<std::uint16_t>(value)) {
  if (value < 0 || value > kMax) {
    throw RangeError("rule number out of range [0, 511]: " + std::to_string(value));
  }
}

int RuleNumber::bit_count() const { return std::popcount(static_cast<unsigned>(value_)); }

std::vector<Fundamental> decompose(RuleNumber rule) {
  std::vector<Fundamental> out;
  for (Fundamental f : kFundamentals) {
    if (rule.contains(f)) out.push_back(f);
  }
  return out;
}

RuleNumber compose(std::span<const Fundamental> fundamentals) {
  int value = 0;
  for (Fundamental f : fundamentals) {
    if (value & weight(f)) {
      throw InvalidArgument("duplicate fundamental rule " + std::to_string(weight(f)));
    }
    value |= weight(f);
  }
  return RuleNumber(value);
}

NeighborOffset offset_of(Fundamental f) {
  switch (f) {
    case Fundamental::kSelf: return {0, 0};
    case Fundamental::kRight: return {0, 1};
    case Fundamental::kBottomRight: return {1, 1};
    case Fundamental::kBottom: return {1, 0};
    case Fundamental::kBottomLeft: return {1, -1};
    case Fundamental::kLeft: return {0, -1};
    case Fundamental::kTopLeft: return {-1, -1};
    case Fundamental::kTop: return {-1, 0};
    case Fundamental::kTopRight: return {-1, 1};
  }
  throw InvalidArgument("invalid fundamental");
}

Fundamental transpose_partner(Fundamental f) {
  // Weights 2..16 pair with 32..256 (a shift by four bits); 1 is fixed.
  const int w = weight(f);
  if (w == 1) return f;
  return static_cast<Fundamental>(w <= 16 ? w << 4 : w >> 4);
}

RuleNumber transpose_partner(RuleNumber rule) {
  int value = 0;
  for (Fundamental f : decompose(rule)) value |= weight(transpose_partner(f));
  return RuleNumber(value);
}

}  // namespace lca
