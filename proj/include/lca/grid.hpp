#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lca/bitvector.hpp"

namespace lca {

/// Largest supported cell count m*n.
inline constexpr std::size_t kMaxCells = std::size_t{1} << 20;

/// Binary m x n state matrix. Each row is packed into 64-bit words, column
/// c at bit c%64 of word c/64; padding bits stay zero.
class Grid {
 public:
  /// All-zero grid. Throws InvalidArgument for a zero dimension and
  /// CapacityError when rows*cols exceeds kMaxCells.
  Grid(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t cell_count() const { return rows_ * cols_; }
  std::size_t words_per_row() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (cells_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v);

  std::span<const std::uint64_t> row(std::size_t r) const {
    return std::span(cells_).subspan(r * stride_, stride_);
  }
  std::span<std::uint64_t> row(std::size_t r) { return std::span(cells_).subspan(r * stride_, stride_); }

  /// Cellwise XOR. Throws DimensionError when shapes differ.
  Grid& operator^=(const Grid& other);
  friend Grid operator^(Grid a, const Grid& b) { return a ^= b; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> cells_;
};

/// Row-major flattening: bit r*n + c is cell (r, c).
BitVector flatten(const Grid& g);

/// Inverse of flatten. Throws DimensionError unless v.size() == rows*cols.
Grid unflatten(const BitVector& v, std::size_t rows, std::size_t cols);

enum class GridFormat { kPlain, kPbm };

/// Reads either the plain format (one line of '0'/'1' per row) or PBM P1.
/// Throws ParseError with the offending line number.
Grid parse_grid(std::istream& in);
Grid parse_grid(std::string_view text);

void write_grid(std::ostream& out, const Grid& g, GridFormat format = GridFormat::kPlain);
std::string serialize_grid(const Grid& g, GridFormat format = GridFormat::kPlain);

/// Deterministic grid: each cell, in row-major order, takes bit 63 of one
/// Xorshift64Star output.
Grid random_grid(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace lca
