#include "lca/grid.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>

#include "lca/error.hpp"
#include "lca/xorshift.hpp"

namespace lca {

Grid::Grid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), stride_(words_for(cols)) {
  if (rows == 0 || cols == 0) throw InvalidArgument("grid dimensions must be positive");
  if (cols > kMaxCells || rows > kMaxCells / cols) {
    throw CapacityError("grid of " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds the " + std::to_string(kMaxCells) + "-cell limit");
  }
  cells_.assign(rows_ * stride_, 0);
}

void Grid::set(std::size_t r, std::size_t c, bool v) {
  std::uint64_t& w = cells_[r * stride_ + c / kWordBits];
  const std::uint64_t m = std::uint64_t{1} << (c % kWordBits);
  w = v ? (w | m) : (w & ~m);
}

Grid& Grid::operator^=(const Grid& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("grid shape mismatch");
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] ^= other.cells_[k];
  return *this;
}

BitVector flatten(const Grid& g) {
  BitVector v(g.cell_count());
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (g.get(r, c)) v.set(r * g.cols() + c, true);
    }
  }
  return v;
}

Grid unflatten(const BitVector& v, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0 || v.size() / rows != cols || v.size() % rows != 0) {
    throw DimensionError("bit vector of length " + std::to_string(v.size()) +
                         " cannot form a " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " grid");
  }
  Grid g(rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) g.set(i / cols, i % cols, true);
  }
  return g;
}

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\f' || ch == '\v'; }

Grid parse_plain(std::string_view text) {
  std::vector<std::string> rows;
  std::size_t first_blank = 0;  // line number of a blank line seen after rows began
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;

    std::string bits;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        bits.push_back(ch);
      } else if (!is_space(ch)) {
        throw ParseError(line_no, std::string("unexpected character '") + ch + "'");
      }
    }
    if (bits.empty()) {
      if (first_blank == 0) first_blank = line_no;
      continue;
    }
    if (first_blank != 0) throw ParseError(first_blank, "blank line inside grid");
    if (rows.empty()) {
      width = bits.size();
    } else if (bits.size() != width) {
      throw ParseError(line_no, "ragged row: expected " + std::to_string(width) + " cells, got " +
                                    std::to_string(bits.size()));
    }
    rows.push_back(std::move(bits));
  }
  if (rows.empty()) throw ParseError(1, "empty input");

  if (width > kMaxCells || rows.size() > kMaxCells / width) {
    throw CapacityError("grid exceeds the " + std::to_string(kMaxCells) + "-cell limit");
  }
  Grid g(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (rows[r][c] == '1') g.set(r, c, true);
    }
  }
  return g;
}

/// Whitespace-separated token reader that tracks line numbers.
class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  std::size_t line() const { return line_; }

  /// Skips whitespace, and '#' comments when `comments` is set.
  void skip(bool comments) {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        ++pos_;
      } else if (is_space(ch)) {
        ++pos_;
      } else if (comments && ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view next(bool comments) {
    skip(comments);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

std::size_t parse_dimension(Tokenizer& tok, const char* what) {
  const std::string_view t = tok.next(true);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || value == 0) {
    throw ParseError(tok.line(), std::string("invalid PBM ") + what + " '" + std::string(t) + "'");
  }
  return value;
}

Grid parse_pbm(std::string_view text) {
  Tokenizer tok(text);
  if (tok.next(false) != "P1") throw ParseError(tok.line(), "expected PBM magic 'P1'");
  const std::size_t width = parse_dimension(tok, "width");
  const std::size_t height = parse_dimension(tok, "height");
  if (width > kMaxCells || height > kMaxCells / width) {
    throw CapacityError("PBM image exceeds the " + std::to_string(kMaxCells) + "-cell limit");
  }

  Grid g(height, width);
  const std::size_t expected = width * height;
  std::size_t read = 0;
  for (std::string_view t = tok.next(false); !t.empty(); t = tok.next(false)) {
    // Digits may also be packed without separators, as netpbm permits.
    for (char ch : t) {
      if (ch != '0' && ch != '1') {
        throw ParseError(tok.line(), std::string("unexpected character '") + ch + "' in PBM data");
      }
      if (read == expected) {
        throw ParseError(tok.line(), "PBM data has more than " + std::to_string(expected) + " bits");
      }
      if (ch == '1') g.set(read / width, read % width, true);
      ++read;
    }
  }
  if (read != expected) {
    throw ParseError(tok.line(), "PBM data has " + std::to_string(read) + " bits, expected " +
                                     std::to_string(expected));
  }
  return g;
}

}  // namespace

Grid parse_grid(std::string_view text) {
  std::size_t k = 0;
  while (k < text.size() && is_space(text[k])) ++k;
  if (k < text.size() && text[k] == 'P') return parse_pbm(text);
  return parse_plain(text);
}

Grid parse_grid(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_grid(std::string_view(text));
}

void write_grid(std::ostream& out, const Grid& g, GridFormat format) {
  if (format == GridFormat::kPbm) out << "P1\n" << g.cols() << ' ' << g.rows() << '\n';
  std::string line;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    line.clear();
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (format == GridFormat::kPbm && c > 0) line.push_back(' ');
      line.push_back(g.get(r, c) ? '1' : '0');
    }
    line.push_back('\n');
    out << line;
  }
}

std::string serialize_grid(const Grid& g, GridFormat format) {
  std::ostringstream os;
  write_grid(os, g, format);
  return std::move(os).str();
}

Grid random_grid(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Grid g(rows, cols);
  Xorshift64Star rng(seed);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) g.set(r, c, rng.next_bit());
  }
  return g;
}

}  // namespace lca
