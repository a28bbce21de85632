#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mobius {

using Word = std::uint64_t;

// Dense bit matrix over GF(2). Rows are single 64-bit words, so the column
// count is capped at 64; every object in this library is far below that.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t n_rows, std::size_t n_cols);

  // Rows written as strings of '0'/'1', e.g. {"101", "011"}.
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return n_cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (rows_[r] >> c) & Word{1};
  }
  void set(std::size_t r, std::size_t c, bool v) {
    if (v)
      rows_[r] |= Word{1} << c;
    else
      rows_[r] &= ~(Word{1} << c);
  }

  Word row(std::size_t r) const { return rows_[r]; }
  void xor_rows(std::size_t src, std::size_t dst) { rows_[dst] ^= rows_[src]; }
  void swap_rows(std::size_t a, std::size_t b) {
    std::swap(rows_[a], rows_[b]);
  }
  void append_row(Word bits) { rows_.push_back(bits); }

  // Column c as a bit vector indexed by row.
  Word column(std::size_t c) const;

  bool operator==(const Gf2Matrix& o) const = default;

  std::string to_string() const;

 private:
  std::vector<Word> rows_;
  std::size_t n_cols_ = 0;
};

struct RrefResult {
  Gf2Matrix reduced;              // same row space, reduced row-echelon form
  std::vector<int> pivot_columns; // strictly increasing; size = rank
};

// Reduced row-echelon form over GF(2). Zero rows are kept (the reduced
// matrix has the same shape as the input).
RrefResult rref(const Gf2Matrix& m);

// rref with a custom column elimination order: pivots are searched in the
// order given by `column_order` (used to force contraction sets into the
// basis). Pivot columns are reported in elimination order.
RrefResult rref_ordered(const Gf2Matrix& m, const std::vector<int>& column_order);

inline int popcount(Word w) { return __builtin_popcountll(w); }
inline int lowest_bit(Word w) { return __builtin_ctzll(w); }

}  // namespace mobius
