#include "mobius/deltawye.hpp"

#include <algorithm>

#include "mobius/catalog.hpp"
#include "mobius/isomin.hpp"

namespace mobius {

BinaryMatroid delta_y(const BinaryMatroid& m, Mask triangle) {
  if (triangle.count() != 3 || !is_circuit(m, triangle))
    throw NotCoindependentTriangle("delta_y: not a triangle");
  if (rank_of(dual(m), triangle) != 3)
    throw NotCoindependentTriangle("delta_y: triangle is not coindependent");

  // basis avoiding the triangle: eliminate its columns last
  std::vector<int> order;
  for (int i = 0; i < m.size(); ++i)
    if (!triangle.test(i)) order.push_back(i);
  for (int i : BitRange(triangle)) order.push_back(i);
  RrefResult rr = rref_ordered(m.rep(), order);

  int e = lowest_bit(triangle.bits);  // becomes the new basis element
  Mask fg = triangle - Mask::single(e);
  std::size_t r = m.rep().rows();
  std::vector<Word> cols(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    if (i == e) {
      cols[static_cast<std::size_t>(i)] = Word{1} << r;
      continue;
    }
    Word c = rr.reduced.column(static_cast<std::size_t>(i));
    if (fg.test(i)) c |= Word{1} << r;
    cols[static_cast<std::size_t>(i)] = c;
  }
  return BinaryMatroid::from_columns(m.labels(), cols, r + 1);
}

BinaryMatroid wye_delta(const BinaryMatroid& m, Mask triad) {
  if (triad.count() != 3 || !is_cocircuit(m, triad))
    throw NotIndependentTriad("wye_delta: not a triad");
  if (rank_of(m, triad) != 3)
    throw NotIndependentTriad("wye_delta: triad is not independent");
  return dual(delta_y(dual(m), triad));
}

BinaryMatroid delta_multi(const BinaryMatroid& m, const TriangleMultiset& ts) {
  // parallel augmentation: element e used by t_e triangles needs t_e - 1
  // fresh copies
  BinaryMatroid cur = m;
  std::vector<std::vector<int>> copies(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    copies[static_cast<std::size_t>(i)].push_back(i);
    int t = ts.multiplicity(i);
    for (int k = 1; k < t; ++k) {
      std::string label = m.label(i) + "~" + std::to_string(k);
      cur = extend_with_column(cur, cur.col(i), label);
      copies[static_cast<std::size_t>(i)].push_back(cur.size() - 1);
    }
  }
  // lift to pairwise disjoint triangles
  std::vector<int> next_copy(static_cast<std::size_t>(m.size()), 0);
  std::vector<Mask> lifted;
  for (Mask t : ts.members) {
    Mask lift;
    for (int i : BitRange(t)) {
      int idx = next_copy[static_cast<std::size_t>(i)]++;
      lift.set(copies[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)]);
    }
    lifted.push_back(lift);
  }
  // positions of the augmented host stay stable through the exchanges
  for (Mask t : lifted) cur = delta_y(cur, t);
  return cur;
}

BinaryMatroid nabla_multi(const BinaryMatroid& m, const TriangleMultiset& ts) {
  return dual(delta_multi(dual(m), ts));
}

bool is_allowable(const BinaryMatroid& m, Mask triangle) {
  static const BinaryMatroid target = mk33();
  return !has_minor_bool(delta_y(m, triangle), target);
}

std::vector<Mask> allowable_triangles(const BinaryMatroid& m) {
  std::vector<Mask> out;
  for (Mask t : triangles_of(m))
    if (rank_of(dual(m), t) == 3 && is_allowable(m, t)) out.push_back(t);
  return out;
}

std::vector<TriangleMultiset> legitimate_sets(const BinaryMatroid& m) {
  std::vector<Mask> allowed = allowable_triangles(m);
  std::vector<Mask> quad_cocircuits;
  for (Mask c : circuits_up_to(m, 4, CircuitMode::cocircuit))
    if (c.count() == 4) quad_cocircuits.push_back(c);

  std::vector<TriangleMultiset> out;
  for (Word pick = 0; pick < (Word{1} << allowed.size()); ++pick) {
    std::vector<Mask> members;
    for (std::size_t i = 0; i < allowed.size(); ++i)
      if ((pick >> i) & 1) members.push_back(allowed[i]);
    bool ok = true;
    for (std::size_t i = 0; i < members.size() && ok; ++i)
      for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
        Mask uni = members[i] | members[j];
        for (Mask q : quad_cocircuits) {
          if (!uni.contains(q)) continue;
          Mask hi = members[i] & q, hj = members[j] & q;
          bool bridged = false;
          for (Mask t : members)
            if (!(t & hi).empty() && !(t & hj).empty()) bridged = true;
          if (!bridged) {
            ok = false;
            break;
          }
        }
      }
    if (ok) out.push_back(TriangleMultiset{std::move(members)});
  }
  return out;
}

ReductionTrace reduce_to_v4c(const BinaryMatroid& m) {
  {
    ConnectivityReport rep = connectivity_report(m);
    if (!rep.is_internally_4connected)
      throw PreconditionViolated("reduce_to_v4c: not internally 4-connected");
  }
  if (is_cographic(m)) throw PreconditionViolated("reduce_to_v4c: cographic");
  if (has_minor_bool(m, mk33()))
    throw PreconditionViolated("reduce_to_v4c: M(K33)-minor present");

  ReductionTrace trace;
  trace.initial = m;
  BinaryMatroid cur = m;
  for (;;) {
    std::vector<Mask> triads = triads_of(cur);
    if (triads.empty()) break;
    std::sort(triads.begin(), triads.end());
    Mask t = triads.front();
    for (Mask seen : trace.triads_used)
      if (!(seen & t).empty())
        throw std::logic_error("reduce_to_v4c: exchanged triads must be disjoint");
    trace.triads_used.push_back(t);
    cur = wye_delta(cur, t);
  }
  trace.m0 = cur;
  SiCoResult s = si_co(cur, SiCoMode::simplify);
  trace.si_m0 = s.result;

  // triad positions are stable on the common ground set; map each element
  // through its parallel class representative in si(m0)
  for (Mask t : trace.triads_used) {
    Mask image;
    for (int i : BitRange(t)) {
      int rep_pos = -1;
      for (std::size_t k = 0; k < s.retained.size(); ++k)
        if (cur.col(s.retained[k]) == cur.col(i)) {
          rep_pos = static_cast<int>(k);
          break;
        }
      if (rep_pos < 0) throw std::logic_error("reduce_to_v4c: lost parallel class");
      image.set(rep_pos);
    }
    if (image.count() != 3)
      throw std::logic_error("reduce_to_v4c: triad image collapsed");
    trace.triangles_in_si.members.push_back(image);
  }
  return trace;
}

BinaryMatroid delta_r_circ(int r) {
  BinaryMatroid m = triangular_mobius(r);
  for (int i = 1; i <= r - 1; ++i) {
    for (const char* base : {"a", "e"}) {
      std::string name = std::string(base) + std::to_string(i);
      int pos = m.position_checked(name);
      m = extend_with_column(m, m.col(pos), name + "'");
    }
  }
  return m;
}

}  // namespace mobius
