#include "mobius/matroid.hpp"

#include <algorithm>

namespace mobius {

BinaryMatroid BinaryMatroid::from_matrix(std::vector<std::string> labels,
                                         const Gf2Matrix& m) {
  if (labels.size() != m.cols())
    throw std::invalid_argument("BinaryMatroid: label/column mismatch");
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        throw std::invalid_argument("BinaryMatroid: duplicate label " + labels[i]);

  BinaryMatroid out;
  RrefResult rr = rref(m);
  out.labels_ = std::move(labels);
  out.rank_ = static_cast<int>(rr.pivot_columns.size());
  Gf2Matrix packed(static_cast<std::size_t>(out.rank_), m.cols());
  for (int r = 0; r < out.rank_; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      packed.set(static_cast<std::size_t>(r), c,
                 rr.reduced.get(static_cast<std::size_t>(r), c));
  out.rep_ = std::move(packed);
  out.cols_.resize(out.labels_.size());
  for (std::size_t c = 0; c < out.labels_.size(); ++c)
    out.cols_[c] = out.rep_.column(c);
  return out;
}

BinaryMatroid BinaryMatroid::from_columns(std::vector<std::string> labels,
                                          const std::vector<Word>& cols,
                                          std::size_t n_rows) {
  Gf2Matrix m(n_rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < n_rows; ++r)
      if ((cols[c] >> r) & 1) m.set(r, c, true);
  return from_matrix(std::move(labels), m);
}

int BinaryMatroid::position(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

int BinaryMatroid::position_checked(std::string_view label) const {
  int p = position(label);
  if (p < 0) throw std::invalid_argument("unknown label: " + std::string(label));
  return p;
}

Mask BinaryMatroid::mask_of(const std::vector<std::string>& names) const {
  Mask m;
  for (const auto& s : names) m.set(position_checked(s));
  return m;
}

std::vector<std::string> BinaryMatroid::names_of(Mask m) const {
  std::vector<std::string> out;
  for (int i : BitRange(m)) out.push_back(labels_[i]);
  return out;
}

// ---- rank machinery --------------------------------------------------------

int rank_of(const BinaryMatroid& m, Mask x) {
  GaussBasis g;
  int r = 0;
  for (int i : BitRange(x))
    if (g.add(m.col(i))) ++r;
  return r;
}

Mask closure_of(const BinaryMatroid& m, Mask x) {
  GaussBasis g;
  for (int i : BitRange(x)) g.add(m.col(i));
  Mask cl = x;
  for (int i : BitRange(m.ground() - x))
    if (g.reduce(m.col(i)) == 0) cl.set(i);
  return cl;
}

int lambda_of(const BinaryMatroid& m, Mask x) {
  return rank_of(m, x) + rank_of(m, m.ground() - x) - m.rank();
}

Mask coclosure_of(const BinaryMatroid& m, Mask x) {
  return closure_of(dual(m), x);
}

RankProfile rank_profile(const BinaryMatroid& m, Mask x) {
  RankProfile p;
  p.rank = rank_of(m, x);
  int r_rest = rank_of(m, m.ground() - x);
  p.lambda = p.rank + r_rest - m.rank();
  p.corank = x.count() + r_rest - m.rank();  // r*(X) = |X| + r(E-X) - r(M)
  p.closure = closure_of(m, x);
  p.coclosure = coclosure_of(m, x);
  return p;
}

// ---- basic constructions ---------------------------------------------------

BinaryMatroid minor(const BinaryMatroid& m, Mask contract, Mask del) {
  if (!(contract & del).empty())
    throw std::invalid_argument("minor: contract and delete sets overlap");
  std::vector<int> order;
  for (int i : BitRange(contract)) order.push_back(i);
  for (int i = 0; i < m.size(); ++i)
    if (!contract.test(i)) order.push_back(i);
  RrefResult rr = rref_ordered(m.rep(), order);
  int contracted_rank = 0;
  for (int c : rr.pivot_columns)
    if (contract.test(c)) ++contracted_rank;

  Mask removed = contract | del;
  std::vector<std::string> labels;
  std::vector<Word> cols;
  for (int i = 0; i < m.size(); ++i) {
    if (removed.test(i)) continue;
    labels.push_back(m.label(i));
    cols.push_back(rr.reduced.column(static_cast<std::size_t>(i)) >> contracted_rank);
  }
  std::size_t rows_left =
      m.rep().rows() - static_cast<std::size_t>(contracted_rank);
  return BinaryMatroid::from_columns(std::move(labels), cols, rows_left);
}

BinaryMatroid restriction(const BinaryMatroid& m, Mask keep) {
  return minor(m, Mask{}, m.ground() - keep);
}

BinaryMatroid dual(const BinaryMatroid& m) {
  // rep is rref: row r's leading bit marks its pivot column.
  int r_rank = m.rank();
  std::vector<int> pivot_of_row(static_cast<std::size_t>(r_rank));
  Mask pivots;
  for (int r = 0; r < r_rank; ++r) {
    int c = lowest_bit(m.rep().row(static_cast<std::size_t>(r)));
    pivot_of_row[static_cast<std::size_t>(r)] = c;
    pivots.set(c);
  }
  std::vector<int> nonpivots;
  for (int c = 0; c < m.size(); ++c)
    if (!pivots.test(c)) nonpivots.push_back(c);

  int dual_rank = static_cast<int>(nonpivots.size());
  std::vector<Word> dcols(static_cast<std::size_t>(m.size()), 0);
  for (int j = 0; j < dual_rank; ++j)
    dcols[static_cast<std::size_t>(nonpivots[j])] = Word{1} << j;
  for (int r = 0; r < r_rank; ++r) {
    Word v = 0;
    for (int j = 0; j < dual_rank; ++j)
      if ((m.col(nonpivots[j]) >> r) & 1) v |= Word{1} << j;
    dcols[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(r)])] = v;
  }
  return BinaryMatroid::from_columns(m.labels(), dcols,
                                     static_cast<std::size_t>(dual_rank));
}

BinaryMatroid extend_with_column(const BinaryMatroid& m, Word column,
                                 const std::string& label) {
  std::vector<std::string> labels = m.labels();
  labels.push_back(label);
  std::vector<Word> cols = m.cols();
  cols.push_back(column);
  return BinaryMatroid::from_columns(std::move(labels), cols, m.rep().rows());
}

BinaryMatroid coextend_with_row(const BinaryMatroid& m, Mask row_bits,
                                const std::string& label) {
  std::size_t r = m.rep().rows();
  std::vector<std::string> labels = m.labels();
  labels.push_back(label);
  std::vector<Word> cols(static_cast<std::size_t>(m.size()) + 1);
  for (int c = 0; c < m.size(); ++c) {
    cols[static_cast<std::size_t>(c)] = m.col(c);
    if (row_bits.test(c)) cols[static_cast<std::size_t>(c)] |= Word{1} << r;
  }
  cols[static_cast<std::size_t>(m.size())] = Word{1} << r;
  return BinaryMatroid::from_columns(std::move(labels), cols, r + 1);
}

BinaryMatroid extend_closing_circuit(const BinaryMatroid& m, Mask closes,
                                     const std::string& label) {
  Word col = 0;
  for (int i : BitRange(closes)) col ^= m.col(i);
  return extend_with_column(m, col, label);
}

BinaryMatroid coextend_into_cocircuit(const BinaryMatroid& m, Mask with,
                                      const std::string& label) {
  BinaryMatroid out = coextend_with_row(m, with, label);
  Mask cocirc = with;
  cocirc.set(out.size() - 1);
  if (!is_cocircuit(out, cocirc))
    throw std::invalid_argument("coextend_into_cocircuit: set is not a cocircuit");
  return out;
}

BinaryMatroid quad_coextension(const BinaryMatroid& m, Mask triangle,
                               const std::string& label) {
  if (triangle.count() != 3 || !is_circuit(m, triangle))
    throw std::invalid_argument("quad_coextension: not a triangle");
  BinaryMatroid out = coextend_with_row(m, triangle, label);
  Mask quad = triangle;
  quad.set(out.size() - 1);
  if (!is_circuit(out, quad) || !is_cocircuit(out, quad))
    throw std::invalid_argument("quad_coextension: quad failed to form");
  return out;
}

Mask loops_of(const BinaryMatroid& m) {
  Mask l;
  for (int i = 0; i < m.size(); ++i)
    if (m.col(i) == 0) l.set(i);
  return l;
}

Mask coloops_of(const BinaryMatroid& m) {
  Mask result;
  for (int i = 0; i < m.size(); ++i) {
    if (m.col(i) == 0) continue;
    if (rank_of(m, m.ground() - Mask::single(i)) < m.rank()) result.set(i);
  }
  return result;
}

bool is_simple(const BinaryMatroid& m) {
  for (int i = 0; i < m.size(); ++i) {
    if (m.col(i) == 0) return false;
    for (int j = 0; j < i; ++j)
      if (m.col(j) == m.col(i)) return false;
  }
  return true;
}

bool is_cosimple(const BinaryMatroid& m) { return is_simple(dual(m)); }

SiCoResult si_co(const BinaryMatroid& m, SiCoMode mode) {
  if (mode == SiCoMode::cosimplify) {
    SiCoResult inner = si_co(dual(m), SiCoMode::simplify);
    return {dual(inner.result), std::move(inner.retained)};
  }
  // first element in label order represents its parallel class
  std::vector<int> retained;
  std::vector<Word> seen;
  for (int i = 0; i < m.size(); ++i) {
    Word c = m.col(i);
    if (c == 0) continue;
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    retained.push_back(i);
  }
  std::vector<std::string> labels;
  std::vector<Word> cols;
  for (int i : retained) {
    labels.push_back(m.label(i));
    cols.push_back(m.col(i));
  }
  return {BinaryMatroid::from_columns(std::move(labels), cols, m.rep().rows()),
          std::move(retained)};
}

// ---- circuits ----------------------------------------------------------------

namespace {

void circuit_dfs(const BinaryMatroid& m, int start, Mask chosen, Word sum,
                 GaussBasis& g, int cap, std::vector<Mask>& out) {
  if (chosen.count() >= cap) return;
  for (int e = start; e < m.size(); ++e) {
    Word c = m.col(e);
    Word nsum = sum ^ c;
    if (nsum == 0) {
      // an independent prefix closed to a zero sum: exactly a circuit
      Mask circ = chosen;
      circ.set(e);
      out.push_back(circ);
      continue;
    }
    Word reduced = g.reduce(c);
    if (reduced == 0) continue;  // dependent without closing: no circuit through here
    g.vecs[g.n++] = reduced;
    Mask nchosen = chosen;
    nchosen.set(e);
    circuit_dfs(m, e + 1, nchosen, nsum, g, cap, out);
    g.pop();
  }
}

}  // namespace

std::vector<Mask> circuits_up_to(const BinaryMatroid& m, int size_cap,
                                 CircuitMode mode) {
  if (mode == CircuitMode::cocircuit)
    return circuits_up_to(dual(m), size_cap, CircuitMode::circuit);
  std::vector<Mask> out;
  GaussBasis g;
  circuit_dfs(m, 0, Mask{}, 0, g, size_cap, out);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  });
  return out;
}

bool is_circuit(const BinaryMatroid& m, Mask x) {
  if (x.empty()) return false;
  Word sum = 0;
  for (int i : BitRange(x)) sum ^= m.col(i);
  if (sum != 0) return false;
  Mask rest = x - Mask::single(lowest_bit(x.bits));
  return rank_of(m, rest) == rest.count();
}

bool is_cocircuit(const BinaryMatroid& m, Mask x) {
  return is_circuit(dual(m), x);
}

// ---- connectivity --------------------------------------------------------------

namespace {

struct PartitionScan {
  const BinaryMatroid& m;
  int max_lambda;
  std::vector<Mask> sides;
  GaussBasis gx, gy;
  Mask x, y;

  void run() {
    if (m.size() == 0) return;
    gx.add(m.col(0));  // position 0 goes to X, breaking complement symmetry
    x.set(0);
    dfs(1);
  }

  void dfs(int i) {
    if (gx.n + gy.n - m.rank() > max_lambda) return;
    if (i == m.size()) {
      if (!y.empty()) sides.push_back(x);
      return;
    }
    Word c = m.col(i);

    bool addx = gx.add(c);
    x.set(i);
    dfs(i + 1);
    if (addx) gx.pop();
    x = x - Mask::single(i);

    bool addy = gy.add(c);
    y.set(i);
    dfs(i + 1);
    if (addy) gy.pop();
    y = y - Mask::single(i);
  }
};

}  // namespace

std::vector<Mask> low_lambda_sides(const BinaryMatroid& m, int max_lambda) {
  PartitionScan scan{m, max_lambda};
  scan.run();
  return scan.sides;
}

ConnectivityReport connectivity_report(const BinaryMatroid& m) {
  ConnectivityReport rep;
  rep.is_3connected = true;
  rep.is_internally_4connected = true;
  rep.is_vertically_4connected = true;
  rep.is_45_connected = true;
  rep.is_almost_v4c = true;

  std::optional<SeparationReport> w3, wi4, wv4, w45, walmost;

  std::vector<Mask> triads = triads_of(m);
  std::vector<Mask> triad_closures;
  triad_closures.reserve(triads.size());
  for (Mask t : triads) triad_closures.push_back(closure_of(m, t));

  for (Mask x : low_lambda_sides(m, 2)) {
    Mask y = m.ground() - x;
    int lam = lambda_of(m, x);
    int sx = x.count(), sy = y.count();
    int rmin = std::min(rank_of(m, x), rank_of(m, y));
    int smin = std::min(sx, sy);

    auto sep = [&](int k, bool vertical) {
      SeparationReport s;
      s.k = k;
      s.side_x = sx <= sy ? x : y;
      s.vertical = vertical;
      s.small_side_size = smin;
      return s;
    };

    if (lam <= 1 && smin >= lam + 1) {
      rep.is_3connected = false;
      if (!w3) w3 = sep(lam + 1, false);
    }
    if (smin >= 4) {
      rep.is_internally_4connected = false;
      if (!wi4) wi4 = sep(lam + 1, false);
    }
    if (smin >= 6) {
      rep.is_45_connected = false;
      if (!w45) w45 = sep(lam + 1, false);
    }
    if (rmin >= lam + 1) {
      rep.is_vertically_4connected = false;
      if (!wv4) wv4 = sep(lam + 1, true);
    }
    if (lam <= 1 && rmin >= lam + 1) {
      rep.is_almost_v4c = false;  // not even vertically 3-connected
      if (!walmost) walmost = sep(lam + 1, true);
    } else if (lam == 2 && rmin >= 3) {
      bool spanned = false;
      for (std::size_t t = 0; t < triads.size() && !spanned; ++t) {
        if (x.contains(triads[t]) && triad_closures[t].contains(x)) spanned = true;
        if (y.contains(triads[t]) && triad_closures[t].contains(y)) spanned = true;
      }
      if (!spanned) {
        rep.is_almost_v4c = false;
        if (!walmost) walmost = sep(3, true);
      }
    }
  }
  if (!rep.is_3connected) {
    rep.is_internally_4connected = false;
    rep.is_45_connected = false;
    if (!wi4) wi4 = w3;
    if (!w45) w45 = w3;
  }

  if (!rep.is_3connected)
    rep.witness = w3;
  else if (!rep.is_internally_4connected)
    rep.witness = wi4;
  else if (!rep.is_vertically_4connected)
    rep.witness = wv4;
  else if (!rep.is_45_connected)
    rep.witness = w45;
  else if (!rep.is_almost_v4c)
    rep.witness = walmost;
  return rep;
}

bool is_3connected(const BinaryMatroid& m) {
  for (Mask x : low_lambda_sides(m, 1)) {
    int lam = lambda_of(m, x);
    if (std::min(x.count(), (m.ground() - x).count()) >= lam + 1) return false;
  }
  return true;
}

bool is_internally_4connected(const BinaryMatroid& m) {
  if (!is_3connected(m)) return false;
  for (Mask x : low_lambda_sides(m, 2))
    if (std::min(x.count(), (m.ground() - x).count()) >= 4) return false;
  return true;
}

bool is_vertically_4connected(const BinaryMatroid& m) {
  for (Mask x : low_lambda_sides(m, 2)) {
    int lam = lambda_of(m, x);
    if (std::min(rank_of(m, x), rank_of(m, m.ground() - x)) >= lam + 1)
      return false;
  }
  return true;
}

// ---- fans ----------------------------------------------------------------------

Mask boundary_cl(const BinaryMatroid& m, Mask x) {
  return x & closure_of(m, m.ground() - x);
}

Mask boundary_cocl(const BinaryMatroid& m, Mask x) {
  return x & coclosure_of(m, m.ground() - x);
}

Mask interior(const BinaryMatroid& m, Mask x) {
  return x - closure_of(m, m.ground() - x);
}

namespace {

bool have_triple(const std::vector<Mask>& fam, int a, int b, int c) {
  Mask t = Mask::single(a) | Mask::single(b) | Mask::single(c);
  return std::find(fam.begin(), fam.end(), t) != fam.end();
}

// Position i (1-based) opens a triangle in a fan ordering when i is odd, a
// triad when i is even; cofan orderings swap the roles.
bool triple_is_triangle(bool first_is_triangle, int i) {
  return (i % 2 == 1) ? first_is_triangle : !first_is_triangle;
}

void fan_dfs(const std::vector<Mask>& triangles, const std::vector<Mask>& triads,
             std::vector<int>& seq, bool first_is_triangle, int n,
             std::vector<std::pair<std::vector<int>, bool>>& out) {
  bool extended = false;
  int t = static_cast<int>(seq.size());
  const std::vector<Mask>& fam =
      triple_is_triangle(first_is_triangle, t - 1) ? triangles : triads;
  for (int e = 0; e < n; ++e) {
    if (std::find(seq.begin(), seq.end(), e) != seq.end()) continue;
    if (!have_triple(fam, seq[t - 2], seq[t - 1], e)) continue;
    seq.push_back(e);
    fan_dfs(triangles, triads, seq, first_is_triangle, n, out);
    seq.pop_back();
    extended = true;
  }
  if (!extended) out.push_back({seq, first_is_triangle});
}

bool is_fan_set(const std::vector<Mask>& triangles,
                const std::vector<Mask>& triads, Mask x) {
  std::vector<int> elems;
  for (int i : BitRange(x)) elems.push_back(i);
  std::sort(elems.begin(), elems.end());
  do {
    for (bool first : {true, false}) {
      bool ok = true;
      for (std::size_t i = 0; i + 2 < elems.size() && ok; ++i) {
        const std::vector<Mask>& fam =
            triple_is_triangle(first, static_cast<int>(i) + 1) ? triangles
                                                               : triads;
        ok = have_triple(fam, elems[i], elems[i + 1], elems[i + 2]);
      }
      if (ok) return true;
    }
  } while (std::next_permutation(elems.begin(), elems.end()));
  return false;
}

}  // namespace

FanReport fans_and_small_separators(const BinaryMatroid& m,
                                    bool classify_separators) {
  FanReport rep;
  std::vector<Mask> triangles = triangles_of(m);
  std::vector<Mask> triads = triads_of(m);

  std::vector<std::pair<std::vector<int>, bool>> orderings;
  for (bool first_triangle : {true, false}) {
    const std::vector<Mask>& fam = first_triangle ? triangles : triads;
    for (Mask t : fam) {
      std::vector<int> perm;
      for (int i : BitRange(t)) perm.push_back(i);
      std::sort(perm.begin(), perm.end());
      do {
        std::vector<int> seq = perm;
        fan_dfs(triangles, triads, seq, first_triangle, m.size(), orderings);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  std::vector<std::tuple<Mask, std::vector<int>, bool>> by_set;
  for (auto& [seq, first_triangle] : orderings) {
    Mask s;
    for (int e : seq) s.set(e);
    bool found = false;
    for (auto& [set, wit, ft] : by_set)
      if (set == s) found = true;
    if (!found) by_set.push_back({s, seq, first_triangle});
  }
  for (auto& [set, wit, first_triangle] : by_set) {
    bool maximal = true;
    for (auto& [other, w2, ft2] : by_set)
      if (!(other == set) && other.contains(set)) maximal = false;
    if (!maximal) continue;
    Fan f;
    f.elements = set;
    f.order = wit;
    f.starts_with_triangle = first_triangle;
    int len = static_cast<int>(wit.size());
    if (len == 4) {
      // read off the cofan ordering; its first element is the good one
      f.good_elements = {first_triangle ? wit[3] : wit[0]};
    } else if (len == 5) {
      f.good_elements = first_triangle ? std::vector<int>{wit[1], wit[3]}
                                       : std::vector<int>{wit[0], wit[4]};
    }
    rep.maximal_fans.push_back(std::move(f));
  }

  if (classify_separators) {
    if (!is_3connected(m))
      throw NotThreeConnected(
          "separator classification requires a 3-connected matroid");
    std::vector<Mask> quads;
    for (Mask c : circuits_up_to(m, 4))
      if (c.count() == 4 && is_cocircuit(m, c)) quads.push_back(c);

    auto classify = [&](Mask x) {
      ClassifiedSeparator cs;
      cs.x = x;
      if (rank_of(m, x) < 3) {
        cs.kind = SeparatorKind::low_rank;
        return cs;
      }
      if (x.count() == 3 &&
          std::find(triads.begin(), triads.end(), x) != triads.end()) {
        cs.kind = SeparatorKind::triad;
        return cs;
      }
      if ((x.count() == 4 || x.count() == 5) &&
          is_fan_set(triangles, triads, x)) {
        cs.kind = SeparatorKind::fan_four_five;
        return cs;
      }
      for (Mask q : quads) {
        if (!x.contains(q)) continue;
        if (closure_of(m, q).contains(x) || coclosure_of(m, q).contains(x)) {
          cs.kind = SeparatorKind::quad_closure;
          cs.quad = q;
          return cs;
        }
      }
      cs.kind = SeparatorKind::low_rank;
      return cs;
    };

    for (Mask xside : low_lambda_sides(m, 2)) {
      Mask y = m.ground() - xside;
      if (lambda_of(m, xside) != 2) continue;
      if (xside.count() < 3 || y.count() < 3) continue;
      for (Mask side : {xside, y})
        if (side.count() <= 5) rep.small_separators.push_back(classify(side));
    }
  }
  return rep;
}

// ---- 2-sum ---------------------------------------------------------------------

BinaryMatroid two_sum(const BinaryMatroid& m1, const BinaryMatroid& m2,
                      const std::string& p) {
  int p1 = m1.position(p), p2 = m2.position(p);
  if (p1 < 0 || p2 < 0) throw BadBasepoint("two_sum: basepoint missing");
  for (const auto& l : m1.labels())
    if (l != p && m2.position(l) >= 0)
      throw BadBasepoint("two_sum: ground sets share more than the basepoint");
  if (m1.col(p1) == 0 || m2.col(p2) == 0)
    throw BadBasepoint("two_sum: basepoint is a loop");
  if (coloops_of(m1).test(p1) || coloops_of(m2).test(p2))
    throw BadBasepoint("two_sum: basepoint is a coloop");

  // m1 with p outside the basis
  std::vector<int> order1;
  for (int i = 0; i < m1.size(); ++i)
    if (i != p1) order1.push_back(i);
  order1.push_back(p1);
  RrefResult r1 = rref_ordered(m1.rep(), order1);
  Word v1 = r1.reduced.column(static_cast<std::size_t>(p1));

  // m2 with p pivoted onto row 0
  std::vector<int> order2{p2};
  for (int i = 0; i < m2.size(); ++i)
    if (i != p2) order2.push_back(i);
  RrefResult r2 = rref_ordered(m2.rep(), order2);

  int rank1 = m1.rank();
  std::vector<std::string> labels;
  std::vector<Word> cols;
  for (int i = 0; i < m1.size(); ++i) {
    if (i == p1) continue;
    labels.push_back(m1.label(i));
    cols.push_back(r1.reduced.column(static_cast<std::size_t>(i)));
  }
  for (int i = 0; i < m2.size(); ++i) {
    if (i == p2) continue;
    labels.push_back(m2.label(i));
    Word c2 = r2.reduced.column(static_cast<std::size_t>(i));
    Word out = (c2 & 1) ? v1 : 0;  // p-coordinate turns into the v1 pattern
    out |= (c2 >> 1) << rank1;
    cols.push_back(out);
  }
  return BinaryMatroid::from_columns(
      std::move(labels), cols,
      static_cast<std::size_t>(rank1 + m2.rank() - 1));
}

}  // namespace mobius
