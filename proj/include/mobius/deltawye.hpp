#pragma once

#include "mobius/matroid.hpp"

namespace mobius {

struct NotCoindependentTriangle : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotIndependentTriad : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Delta-Y exchange on a coindependent triangle: the triangle becomes an
// independent triad on the same ground set; rank goes up by one.
BinaryMatroid delta_y(const BinaryMatroid& m, Mask triangle);
// Y-Delta exchange on an independent triad (the dual operation).
BinaryMatroid wye_delta(const BinaryMatroid& m, Mask triad);

// Multiset of triangles over one host; per-element multiplicities derived.
struct TriangleMultiset {
  std::vector<Mask> members;
  int multiplicity(int position) const {
    int t = 0;
    for (Mask m : members)
      if (m.test(position)) ++t;
    return t;
  }
};

// Delta exchange over a triangle multiset: parallel-augment shared elements,
// lift to disjoint triangles, then exchange each in turn.
BinaryMatroid delta_multi(const BinaryMatroid& m, const TriangleMultiset& ts);
// nabla counterpart: ts holds triangles of dual(m).
BinaryMatroid nabla_multi(const BinaryMatroid& m, const TriangleMultiset& ts);

// Is delta_y(m, t) still free of an M(K33)-minor? (Caller warrants m is.)
bool is_allowable(const BinaryMatroid& m, Mask triangle);
std::vector<Mask> allowable_triangles(const BinaryMatroid& m);

// All triangle sets usable for reconstruction: members allowable, and every
// pair spanning a 4-element cocircuit is bridged by a third member meeting
// both halves. Includes the empty set.
std::vector<TriangleMultiset> legitimate_sets(const BinaryMatroid& m);

struct ReductionTrace {
  BinaryMatroid initial;
  std::vector<Mask> triads_used;  // positions are stable across the exchanges
  BinaryMatroid m0;               // triad-free endpoint
  BinaryMatroid si_m0;
  TriangleMultiset triangles_in_si;  // images of the used triads in si(m0)
};

// Repeated Y-Delta exchanges from an internally 4-connected non-cographic
// host with no M(K33)-minor down to a triad-free (hence vertically
// 4-connected) matroid.
ReductionTrace reduce_to_v4c(const BinaryMatroid& m);

// Triangular Moebius matroid with a parallel copy added to every rim element.
BinaryMatroid delta_r_circ(int r);

}  // namespace mobius
