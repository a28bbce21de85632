#include "mobius/fundgraph.hpp"

#include <algorithm>

namespace mobius {

StandardForm standard_form(const Gf2Matrix& m,
                           const std::vector<std::string>& labels,
                           const std::vector<std::string>& basis) {
  auto pos = [&](std::string_view s) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return static_cast<int>(i);
    throw NotABasis("standard_form: unknown label " + std::string(s));
  };

  RrefResult plain = rref(m);
  int rank = static_cast<int>(plain.pivot_columns.size());

  std::vector<int> basis_positions;
  if (basis.empty()) {
    basis_positions = plain.pivot_columns;
  } else {
    if (static_cast<int>(basis.size()) != rank)
      throw NotABasis("standard_form: basis has wrong size");
    for (const auto& s : basis) basis_positions.push_back(pos(s));
  }

  RrefResult rr = rref_ordered(m, [&] {
    std::vector<int> order = basis_positions;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (std::find(order.begin(), order.end(), static_cast<int>(c)) ==
          order.end())
        order.push_back(static_cast<int>(c));
    return order;
  }());
  for (std::size_t i = 0; i < basis_positions.size(); ++i)
    if (i >= rr.pivot_columns.size() ||
        rr.pivot_columns[i] != basis_positions[i])
      throw NotABasis("standard_form: requested set is dependent");

  StandardForm out;
  out.column_order = basis_positions;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (std::find(basis_positions.begin(), basis_positions.end(),
                  static_cast<int>(c)) == basis_positions.end())
      out.column_order.push_back(static_cast<int>(c));

  out.matrix = Gf2Matrix(static_cast<std::size_t>(rank), m.cols());
  for (int r = 0; r < rank; ++r)
    for (std::size_t j = 0; j < out.column_order.size(); ++j)
      out.matrix.set(static_cast<std::size_t>(r), j,
                     rr.reduced.get(static_cast<std::size_t>(r),
                                    static_cast<std::size_t>(out.column_order[j])));
  for (std::size_t j = 0; j < out.column_order.size(); ++j) {
    if (j < static_cast<std::size_t>(rank))
      out.basis.push_back(labels[static_cast<std::size_t>(out.column_order[j])]);
    else
      out.cobasis.push_back(labels[static_cast<std::size_t>(out.column_order[j])]);
  }
  return out;
}

StandardForm standard_form(const BinaryMatroid& m,
                           const std::vector<std::string>& basis) {
  return standard_form(m.rep(), m.labels(), basis);
}

bool FundamentalGraph::adjacent(std::string_view a, std::string_view b) const {
  auto find = [](const std::vector<std::string>& v, std::string_view s) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == s) return static_cast<int>(i);
    return -1;
  };
  int bi = find(basis_side, a), cj = find(cobasis_side, b);
  if (bi < 0 || cj < 0) {
    bi = find(basis_side, b);
    cj = find(cobasis_side, a);
  }
  if (bi < 0 || cj < 0) return false;
  return (adjacency[static_cast<std::size_t>(bi)] >> cj) & 1;
}

std::vector<std::string> FundamentalGraph::neighbors(std::string_view v) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < basis_side.size(); ++i)
    if (basis_side[i] == v) {
      for (std::size_t j = 0; j < cobasis_side.size(); ++j)
        if ((adjacency[i] >> j) & 1) out.push_back(cobasis_side[j]);
      return out;
    }
  for (std::size_t j = 0; j < cobasis_side.size(); ++j)
    if (cobasis_side[j] == v) {
      for (std::size_t i = 0; i < basis_side.size(); ++i)
        if ((adjacency[i] >> j) & 1) out.push_back(basis_side[i]);
      return out;
    }
  return out;
}

int FundamentalGraph::degree(std::string_view v) const {
  return static_cast<int>(neighbors(v).size());
}

BinaryMatroid FundamentalGraph::to_matroid() const {
  std::vector<std::string> labels = basis_side;
  labels.insert(labels.end(), cobasis_side.begin(), cobasis_side.end());
  std::vector<Word> cols;
  for (std::size_t i = 0; i < basis_side.size(); ++i)
    cols.push_back(Word{1} << i);
  for (std::size_t j = 0; j < cobasis_side.size(); ++j) {
    Word c = 0;
    for (std::size_t i = 0; i < basis_side.size(); ++i)
      if ((adjacency[i] >> j) & 1) c |= Word{1} << i;
    cols.push_back(c);
  }
  return BinaryMatroid::from_columns(std::move(labels), cols,
                                     basis_side.size());
}

FundamentalGraph fundamental_graph(const BinaryMatroid& m,
                                   const std::vector<std::string>& basis) {
  StandardForm sf = standard_form(m, basis);
  FundamentalGraph g;
  g.basis_side = sf.basis;
  g.cobasis_side = sf.cobasis;
  std::size_t r = sf.basis.size();
  g.adjacency.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < sf.cobasis.size(); ++j)
      if (sf.matrix.get(i, r + j)) g.adjacency[i] |= Word{1} << j;
  return g;
}

FundamentalGraph pivot(const FundamentalGraph& g, std::string_view x,
                       std::string_view y) {
  int xi = -1, yj = -1;
  for (std::size_t i = 0; i < g.basis_side.size(); ++i)
    if (g.basis_side[i] == x) xi = static_cast<int>(i);
  for (std::size_t j = 0; j < g.cobasis_side.size(); ++j)
    if (g.cobasis_side[j] == y) yj = static_cast<int>(j);
  if (xi < 0 || yj < 0)
    throw PivotOnNonEdge("pivot: x must be in the basis and y outside it");
  if (!((g.adjacency[static_cast<std::size_t>(xi)] >> yj) & 1))
    throw PivotOnNonEdge("pivot: entry A[x][y] is zero");

  FundamentalGraph out = g;
  Word nx = g.adjacency[static_cast<std::size_t>(xi)];  // N(x) over cobasis
  for (std::size_t i = 0; i < g.basis_side.size(); ++i) {
    if (static_cast<int>(i) == xi) continue;
    if ((g.adjacency[i] >> yj) & 1)  // i in N(y) - x
      out.adjacency[i] ^= nx & ~(Word{1} << yj);
  }
  out.basis_side[static_cast<std::size_t>(xi)] = std::string(y);
  out.cobasis_side[static_cast<std::size_t>(yj)] = std::string(x);
  return out;
}

FundamentalGraph pivot(const BinaryMatroid& m,
                       const std::vector<std::string>& basis,
                       std::string_view x, std::string_view y) {
  return pivot(fundamental_graph(m, basis), x, y);
}

}  // namespace mobius
