#include "lca/gf2.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "lca/error.hpp"

namespace lca {

Gf2Matrix::Gf2Matrix(std::size_t dim) : dim_(dim), stride_(words_for(dim)) {
  if (dim > kMaxMatrixDim) {
    throw CapacityError("matrix dimension " + std::to_string(dim) + " exceeds " +
                        std::to_string(kMaxMatrixDim));
  }
  bits_.assign(dim_ * stride_, 0);
}

Gf2Matrix Gf2Matrix::identity(std::size_t dim) {
  Gf2Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, true);
  return m;
}

void Gf2Matrix::set(std::size_t i, std::size_t j, bool v) {
  std::uint64_t& w = bits_[i * stride_ + j / kWordBits];
  const std::uint64_t m = std::uint64_t{1} << (j % kWordBits);
  w = v ? (w | m) : (w & ~m);
}

Gf2Matrix& Gf2Matrix::operator^=(const Gf2Matrix& other) {
  if (dim_ != other.dim_) {
    throw DimensionError("matrix dimension mismatch: " + std::to_string(dim_) + " vs " +
                         std::to_string(other.dim_));
  }
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] ^= other.bits_[k];
  return *this;
}

Gf2Matrix transpose(const Gf2Matrix& a) {
  Gf2Matrix t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto row = a.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      for (std::uint64_t w = row[k]; w != 0; w &= w - 1) {
        t.set(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)), i, true);
      }
    }
  }
  return t;
}

namespace {

bool dot_parity(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc ^= a[k] & b[k];
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace

BitVector matvec(const Gf2Matrix& a, const BitVector& v) {
  if (v.size() != a.dim()) {
    throw DimensionError("vector length " + std::to_string(v.size()) + " does not match matrix dimension " +
                         std::to_string(a.dim()));
  }
  BitVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (dot_parity(a.row(i), v.words())) out.set(i, true);
  }
  return out;
}

Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
  // Row i of the product is the XOR of the rows of b selected by row i of a.
  Gf2Matrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto out = c.row(i);
    const auto sel = a.row(i);
    for (std::size_t k = 0; k < sel.size(); ++k) {
      for (std::uint64_t w = sel[k]; w != 0; w &= w - 1) {
        const auto src = b.row(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        for (std::size_t x = 0; x < out.size(); ++x) out[x] ^= src[x];
      }
    }
  }
  return c;
}

Gf2Matrix matpow(const Gf2Matrix& a, std::uint64_t t) {
  Gf2Matrix result = Gf2Matrix::identity(a.dim());
  Gf2Matrix base = a;
  while (t != 0) {
    if (t & 1U) result = multiply(result, base);
    t >>= 1;
    if (t != 0) base = multiply(base, base);
  }
  return result;
}

std::size_t rank(const Gf2Matrix& a) {
  const std::size_t stride = a.words_per_row();
  std::vector<std::uint64_t> rows(a.dim() * stride);
  for (std::size_t i = 0; i < a.dim(); ++i) std::ranges::copy(a.row(i), rows.begin() + i * stride);
  auto row = [&](std::size_t i) { return std::span(rows).subspan(i * stride, stride); };

  std::size_t r = 0;
  for (std::size_t col = 0; col < a.dim() && r < a.dim(); ++col) {
    const std::size_t word = col / kWordBits;
    const std::uint64_t bit = std::uint64_t{1} << (col % kWordBits);
    std::size_t pivot = r;
    while (pivot < a.dim() && (row(pivot)[word] & bit) == 0) ++pivot;
    if (pivot == a.dim()) continue;
    if (pivot != r) std::swap_ranges(row(pivot).begin(), row(pivot).end(), row(r).begin());
    const auto p = row(r);
    for (std::size_t i = r + 1; i < a.dim(); ++i) {
      auto target = row(i);
      if (target[word] & bit) {
        for (std::size_t x = word; x < stride; ++x) target[x] ^= p[x];
      }
    }
    ++r;
  }
  return r;
}

std::size_t popcount(const Gf2Matrix& a) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::uint64_t w : a.row(i)) n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> nonzero_entries(const Gf2Matrix& a) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto row = a.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      for (std::uint64_t w = row[k]; w != 0; w &= w - 1) {
        out.emplace_back(i, k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
  }
  return out;
}

std::string format_header(const MatrixHeader& header) {
  std::string s = "#";
  if (header.has_rule()) {
    s += " rule " + std::to_string(header.rule) + " rows " + std::to_string(header.rows) + " cols " +
         std::to_string(header.cols);
  }
  s += " dim " + std::to_string(header.dim);
  return s;
}

void write_matrix(std::ostream& out, const Gf2Matrix& a, const MatrixHeader& header, MatrixFormat format) {
  out << format_header(header) << '\n';
  if (format == MatrixFormat::kCoords) {
    for (const auto& [i, j] : nonzero_entries(a)) out << i << ' ' << j << '\n';
    return;
  }
  std::string line(a.dim(), '0');
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) line[j] = a.get(i, j) ? '1' : '0';
    out << line << '\n';
  }
}

namespace {

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
    const std::size_t start = pos;
    while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != '\r') ++pos;
    if (pos > start) words.push_back(s.substr(start, pos - start));
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(word) + "'");
  }
  return value;
}

}  // namespace

MatrixHeader parse_header(std::string_view line, std::size_t line_no) {
  const auto words = split_words(line);
  MatrixHeader h;
  if (words.size() == 3 && words[0] == "#" && words[1] == "dim") {
    h.dim = parse_count(words[2], line_no);
    return h;
  }
  if (words.size() == 9 && words[0] == "#" && words[1] == "rule" && words[3] == "rows" &&
      words[5] == "cols" && words[7] == "dim") {
    const std::size_t rule = parse_count(words[2], line_no);
    if (rule > std::size_t{511}) throw ParseError(line_no, "rule number out of range");
    h.rule = static_cast<int>(rule);
    h.rows = parse_count(words[4], line_no);
    h.cols = parse_count(words[6], line_no);
    h.dim = parse_count(words[8], line_no);
    if (h.rows * h.cols != h.dim) throw ParseError(line_no, "dim is not rows*cols");
    return h;
  }
  throw ParseError(line_no, "malformed matrix header '" + std::string(line) + "'");
}

std::pair<MatrixHeader, Gf2Matrix> read_dense_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!split_words(line).empty()) break;
  }
  if (!in && line.empty()) throw ParseError(line_no + 1, "missing matrix header");
  const MatrixHeader header = parse_header(line, line_no);
  Gf2Matrix m(header.dim);
  for (std::size_t i = 0; i < header.dim; ++i) {
    if (!std::getline(in, line)) throw ParseError(line_no + 1, "missing matrix row");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != header.dim) {
      throw ParseError(line_no, "expected " + std::to_string(header.dim) + " entries, got " +
                                    std::to_string(line.size()));
    }
    for (std::size_t j = 0; j < header.dim; ++j) {
      if (line[j] != '0' && line[j] != '1') {
        throw ParseError(line_no, std::string("unexpected character '") + line[j] + "'");
      }
      if (line[j] == '1') m.set(i, j, true);
    }
  }
  return {header, std::move(m)};
}

}  // namespace lca
