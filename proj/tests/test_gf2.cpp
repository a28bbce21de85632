#include <doctest.h>

#include <random>

#include "mobius/catalog.hpp"
#include "mobius/fundgraph.hpp"
#include "mobius/isomin.hpp"
#include "oracles.hpp"

using namespace mobius;

TEST_CASE("rref of the identity and of zero matrices") {
  Gf2Matrix id = Gf2Matrix::from_strings({"1000", "0100", "0010", "0001"});
  RrefResult r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivot_columns == std::vector<int>{0, 1, 2, 3});

  Gf2Matrix zero(3, 5);
  RrefResult z = rref(zero);
  CHECK(z.reduced == zero);
  CHECK(z.pivot_columns.empty());
}

TEST_CASE("rref of the rank-4 triangular Moebius matrix") {
  BinaryMatroid d4 = triangular_mobius(4);
  RrefResult r = rref(d4.rep());
  CHECK(r.pivot_columns.size() == 4);
  // pivots land on the first occurrences of the standard basis columns
  CHECK(r.pivot_columns ==
        std::vector<int>{d4.position_checked("e1"), d4.position_checked("e2"),
                         d4.position_checked("e3"), d4.position_checked("e4")});
}

TEST_CASE("rref is idempotent and preserves the row space") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    BinaryMatroid m = oracles::random_matroid(rng, 4, 8);
    RrefResult once = rref(m.rep());
    RrefResult twice = rref(once.reduced);
    CHECK(once.reduced == twice.reduced);
    CHECK(once.pivot_columns.size() == static_cast<std::size_t>(m.rank()));
  }
}

TEST_CASE("standard form with the natural basis of delta_4") {
  BinaryMatroid d4 = triangular_mobius(4);
  StandardForm sf = standard_form(d4, {"e1", "e2", "e3", "e4"});
  CHECK(sf.basis == std::vector<std::string>{"e1", "e2", "e3", "e4"});
  auto col_of = [&](const std::string& name) {
    for (std::size_t j = 0; j < sf.cobasis.size(); ++j)
      if (sf.cobasis[j] == name) {
        Word c = 0;
        for (std::size_t r = 0; r < 4; ++r)
          if (sf.matrix.get(r, 4 + j)) c |= Word{1} << r;
        return c;
      }
    FAIL("missing cobasis label");
    return Word{0};
  };
  CHECK(col_of("a1") == 0b1001);  // e1 + e4
  CHECK(col_of("a2") == 0b1010);
  CHECK(col_of("a3") == 0b1100);
  CHECK(col_of("b1") == 0b0011);  // e1 + e2
  CHECK(col_of("b2") == 0b0110);
  CHECK(col_of("b3") == 0b1101);  // e1 + e3 + e4
}

TEST_CASE("standard form rejects non-bases") {
  BinaryMatroid d4 = triangular_mobius(4);
  CHECK_THROWS_AS(standard_form(d4, {"e1", "a1"}), NotABasis);
  // a1 = e1 + e4, so {e1, e4, a1, b1} is dependent
  CHECK_THROWS_AS(standard_form(d4, {"e1", "e4", "a1", "b1"}), NotABasis);
}

TEST_CASE("fundamental graph of delta_4: tip adjacency") {
  BinaryMatroid d4 = triangular_mobius(4);
  FundamentalGraph g = fundamental_graph(d4, {"e1", "e2", "e3", "e4"});
  auto nb = g.neighbors("e4");
  std::sort(nb.begin(), nb.end());
  CHECK(nb == std::vector<std::string>{"a1", "a2", "a3", "b3"});
}

TEST_CASE("a coloop is an isolated vertex of the fundamental graph") {
  BinaryMatroid m = BinaryMatroid::from_columns(
      {"x", "y", "z"}, {0b01, 0b01, 0b10}, 2);  // z is a coloop
  FundamentalGraph g = fundamental_graph(m, {"x", "z"});
  CHECK(g.degree("z") == 0);
}

TEST_CASE("fundamental graph of upsilon_4: every spoke has degree three") {
  BinaryMatroid u4 = triadic_mobius(4);
  FundamentalGraph g = fundamental_graph(u4, {"e1", "e2", "e3", "e4"});
  for (const char* c : {"c1", "c2", "c3"}) CHECK(g.degree(c) == 3);
}

TEST_CASE("pivoting is an involution and matches the direct computation") {
  BinaryMatroid d4 = triangular_mobius(4);
  std::vector<std::string> basis = {"e1", "e2", "e3", "e4"};
  FundamentalGraph g = fundamental_graph(d4, basis);

  FundamentalGraph p = pivot(g, "e1", "a1");
  FundamentalGraph direct = fundamental_graph(d4, {"a1", "e2", "e3", "e4"});
  for (const auto& b : p.basis_side)
    for (const auto& c : p.cobasis_side)
      CHECK(p.adjacent(b, c) == direct.adjacent(b, c));

  FundamentalGraph back = pivot(p, "a1", "e1");
  CHECK(back.adjacency == g.adjacency);
  CHECK(back.basis_side == g.basis_side);

  CHECK_THROWS_AS(pivot(g, "e1", "b2"), PivotOnNonEdge);  // A[e1][b2] = 0
}

TEST_CASE("pivoting never changes the represented matroid") {
  BinaryMatroid d5 = triangular_mobius(5);
  CanonicalKey key = canonical_form(d5);
  std::mt19937_64 rng(11);
  FundamentalGraph g = fundamental_graph(d5, {"e1", "e2", "e3", "e4", "e5"});
  for (int step = 0; step < 60; ++step) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& b : g.basis_side)
      for (const auto& c : g.cobasis_side)
        if (g.adjacent(b, c)) edges.push_back({b, c});
    auto [x, y] = edges[rng() % edges.size()];
    g = pivot(g, x, y);
    CHECK(canonical_form(g.to_matroid()) == key);
  }
}

TEST_CASE("deleting vertices of the fundamental graph matches the minor") {
  // induced subgraph on E - (X ∪ Y) vs the graph of M/X\Y with basis B-X
  for (BinaryMatroid m : {triangular_mobius(4), triadic_mobius(4)}) {
    std::vector<std::string> basis = {"e1", "e2", "e3", "e4"};
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      Mask bmask = m.mask_of(basis);
      Mask x, y;
      for (int i : BitRange(bmask))
        if (rng() % 3 == 0) x.set(i);
      for (int i : BitRange(m.ground() - bmask))
        if (rng() % 3 == 0) y.set(i);
      if ((m.ground() - x - y).empty()) continue;
      BinaryMatroid mm = minor(m, x, y);
      if (mm.rank() == 0) continue;
      std::vector<std::string> sub_basis;
      for (const auto& b : basis)
        if (!x.test(m.position_checked(b))) sub_basis.push_back(b);
      FundamentalGraph direct = fundamental_graph(mm, sub_basis);
      FundamentalGraph whole = fundamental_graph(m, basis);
      for (const auto& b : direct.basis_side)
        for (const auto& c : direct.cobasis_side)
          CHECK(direct.adjacent(b, c) == whole.adjacent(b, c));
    }
  }
}
