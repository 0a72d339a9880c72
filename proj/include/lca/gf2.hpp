#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lca/bitvector.hpp"

namespace lca {

/// Largest supported matrix dimension (2^14 rows of 2^14 bits = 32 MiB).
inline constexpr std::size_t kMaxMatrixDim = std::size_t{1} << 14;

/// Dense square matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
 public:
  /// Zero matrix. Throws CapacityError above kMaxMatrixDim.
  explicit Gf2Matrix(std::size_t dim);

  static Gf2Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t words_per_row() const { return stride_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool v);
  void flip(std::size_t i, std::size_t j) {
    bits_[i * stride_ + j / kWordBits] ^= std::uint64_t{1} << (j % kWordBits);
  }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return std::span(bits_).subspan(i * stride_, stride_);
  }
  std::span<std::uint64_t> row(std::size_t i) { return std::span(bits_).subspan(i * stride_, stride_); }

  /// Entrywise XOR (the join of two adjacency matrices). Throws
  /// DimensionError when dimensions differ.
  Gf2Matrix& operator^=(const Gf2Matrix& other);
  friend Gf2Matrix operator^(Gf2Matrix a, const Gf2Matrix& b) { return a ^= b; }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t dim_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

Gf2Matrix transpose(const Gf2Matrix& a);

/// result[i] = parity(row i AND v). Throws DimensionError if sizes differ.
BitVector matvec(const Gf2Matrix& a, const BitVector& v);

/// Product over GF(2). Throws DimensionError if dimensions differ.
Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b);

/// a^t by binary exponentiation; a^0 is the identity.
Gf2Matrix matpow(const Gf2Matrix& a, std::uint64_t t);

/// Row rank via Gaussian elimination.
std::size_t rank(const Gf2Matrix& a);

std::size_t popcount(const Gf2Matrix& a);

/// Coordinates (i, j) of every 1 entry, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> nonzero_entries(const Gf2Matrix& a);

// Text format
//
//   # rule <R> rows <m> cols <n> dim <d>      (or "# dim <d>" for raw matrices)
//   dense:  d lines of d characters '0'/'1'
//   coords: one "<i> <j>" line per 1 entry, lexicographic order

enum class MatrixFormat { kDense, kCoords };

/// Header fields of one matrix block. `rule`, `rows` and `cols` are absent
/// for raw matrices.
struct MatrixHeader {
  std::size_t dim = 0;
  int rule = -1;
  std::size_t rows = 0;
  std::size_t cols = 0;

  bool has_rule() const { return rule >= 0; }
};

std::string format_header(const MatrixHeader& header);

void write_matrix(std::ostream& out, const Gf2Matrix& a, const MatrixHeader& header,
                  MatrixFormat format = MatrixFormat::kDense);

/// Parses a header line ("# rule ..." or "# dim ..."). Throws ParseError.
MatrixHeader parse_header(std::string_view line, std::size_t line_no);

/// Reads one dense block (header plus dim rows) from `in`. Throws ParseError.
std::pair<MatrixHeader, Gf2Matrix> read_dense_matrix(std::istream& in);

}  // namespace lca
