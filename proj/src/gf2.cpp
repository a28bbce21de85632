#include "mobius/gf2.hpp"

#include <stdexcept>

namespace mobius {

Gf2Matrix::Gf2Matrix(std::size_t n_rows, std::size_t n_cols)
    : rows_(n_rows, Word{0}), n_cols_(n_cols) {
  if (n_cols > 64) throw std::invalid_argument("Gf2Matrix: more than 64 columns");
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  Gf2Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.n_cols_)
      throw std::invalid_argument("Gf2Matrix::from_strings: ragged rows");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] == '1')
        m.set(r, c, true);
      else if (rows[r][c] != '0')
        throw std::invalid_argument("Gf2Matrix::from_strings: bad character");
    }
  }
  return m;
}

Word Gf2Matrix::column(std::size_t c) const {
  Word out = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (get(r, c)) out |= Word{1} << r;
  return out;
}

std::string Gf2Matrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) s += get(r, c) ? '1' : '0';
    s += '\n';
  }
  return s;
}

RrefResult rref_ordered(const Gf2Matrix& m, const std::vector<int>& column_order) {
  RrefResult res{m, {}};
  Gf2Matrix& a = res.reduced;
  std::size_t next_row = 0;
  for (int c : column_order) {
    std::size_t pivot = a.rows();
    for (std::size_t r = next_row; r < a.rows(); ++r)
      if (a.get(r, static_cast<std::size_t>(c))) {
        pivot = r;
        break;
      }
    if (pivot == a.rows()) continue;
    a.swap_rows(pivot, next_row);
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != next_row && a.get(r, static_cast<std::size_t>(c)))
        a.xor_rows(next_row, r);
    res.pivot_columns.push_back(c);
    ++next_row;
  }
  return res;
}

RrefResult rref(const Gf2Matrix& m) {
  std::vector<int> order(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) order[c] = static_cast<int>(c);
  return rref_ordered(m, order);
}

}  // namespace mobius
