#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace lca {

/// One of the nine single-neighbour rules. The enumerator value is the
/// rule's weight in the 3x3 numbering stencil:
///
///    64 128 256
///    32   1   2
///    16   8   4
enum class Fundamental : std::uint16_t {
  kSelf = 1,
  kRight = 2,
  kBottomRight = 4,
  kBottom = 8,
  kBottomLeft = 16,
  kLeft = 32,
  kTopLeft = 64,
  kTop = 128,
  kTopRight = 256,
};

inline constexpr std::array<Fundamental, 9> kFundamentals = {
    Fundamental::kSelf,       Fundamental::kRight, Fundamental::kBottomRight,
    Fundamental::kBottom,     Fundamental::kBottomLeft, Fundamental::kLeft,
    Fundamental::kTopLeft,    Fundamental::kTop,   Fundamental::kTopRight,
};

constexpr int weight(Fundamental f) { return static_cast<int>(f); }

/// Throws InvalidArgument unless `w` is a power of two in [1, 256].
Fundamental fundamental_from_weight(int w);

/// Relative position of the neighbour a fundamental reads. `dr` grows
/// downward, `dc` grows rightward.
struct NeighborOffset {
  int dr = 0;
  int dc = 0;

  friend constexpr bool operator==(NeighborOffset, NeighborOffset) = default;
};

/// A linear rule: bit k set means the cell depends on fundamental 2^k.
class RuleNumber {
 public:
  static constexpr int kMax = 511;

  constexpr RuleNumber() = default;
  /// Throws RangeError outside [0, 511].
  explicit RuleNumber(int value);
  /// Implicit: a single fundamental is itself a rule.
  constexpr RuleNumber(Fundamental f) : value_(static_cast<std::uint16_t>(f)) {}

  constexpr int value() const { return value_; }
  constexpr bool contains(Fundamental f) const { return (value_ & weight(f)) != 0; }
  int bit_count() const;

  friend constexpr bool operator==(RuleNumber, RuleNumber) = default;
  friend constexpr auto operator<=>(RuleNumber, RuleNumber) = default;

 private:
  std::uint16_t value_ = 0;
};

/// Fundamentals in ascending weight order; empty iff the rule is 0.
std::vector<Fundamental> decompose(RuleNumber rule);

/// Sum of distinct fundamentals. Throws InvalidArgument on duplicates.
RuleNumber compose(std::span<const Fundamental> fundamentals);

NeighborOffset offset_of(Fundamental f);

/// The fundamental with the opposite offset; its rule matrix is the
/// transpose. Self is its own partner.
Fundamental transpose_partner(Fundamental f);

/// Rule formed by replacing every fundamental of `rule` with its partner.
RuleNumber transpose_partner(RuleNumber rule);

}  // namespace lca
