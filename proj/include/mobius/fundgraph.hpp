#pragma once

#include "mobius/matroid.hpp"

namespace mobius {

struct StandardForm {
  Gf2Matrix matrix;                  // [I|A] shape after column permutation
  std::vector<std::string> basis;    // labels of the identity block, in order
  std::vector<std::string> cobasis;  // labels of the A block, in order
  std::vector<int> column_order;     // permutation applied to the input columns
};

// Row-reduce so that the chosen basis forms an identity block. When `basis`
// is empty the pivot columns of the plain rref are used.
StandardForm standard_form(const Gf2Matrix& m,
                           const std::vector<std::string>& labels,
                           const std::vector<std::string>& basis = {});
StandardForm standard_form(const BinaryMatroid& m,
                           const std::vector<std::string>& basis = {});

// Bipartite graph G_B(M) on basis vs cobasis: a basis element is adjacent to
// a cobasis element exactly when it lies in that element's fundamental
// circuit.
struct FundamentalGraph {
  std::vector<std::string> basis_side;
  std::vector<std::string> cobasis_side;
  std::vector<Word> adjacency;  // one row per basis element, bits over cobasis

  bool adjacent(std::string_view a, std::string_view b) const;
  std::vector<std::string> neighbors(std::string_view v) const;
  int degree(std::string_view v) const;

  // Reconstruct the represented matroid, columns ordered basis-then-cobasis.
  BinaryMatroid to_matroid() const;

  bool operator==(const FundamentalGraph&) const = default;
};

FundamentalGraph fundamental_graph(const BinaryMatroid& m,
                                   const std::vector<std::string>& basis);

// Pivot on the edge xy (x in the basis, y outside): rewrites the adjacency by
// toggling every pair between N(y)-x and N(x)-y, then exchanges the two
// labels. The result is the fundamental graph of the same matroid with
// respect to (B - x) ∪ y.
FundamentalGraph pivot(const FundamentalGraph& g, std::string_view x,
                       std::string_view y);
FundamentalGraph pivot(const BinaryMatroid& m,
                       const std::vector<std::string>& basis,
                       std::string_view x, std::string_view y);

}  // namespace mobius
