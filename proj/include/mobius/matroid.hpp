#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mobius/gf2.hpp"

namespace mobius {

// Subset of a matroid's ground set, positional over its label order.
struct Mask {
  Word bits = 0;

  constexpr Mask() = default;
  constexpr explicit Mask(Word b) : bits(b) {}

  static constexpr Mask all(int n) {
    return Mask{n >= 64 ? ~Word{0} : (Word{1} << n) - 1};
  }
  static constexpr Mask single(int i) { return Mask{Word{1} << i}; }

  bool test(int i) const { return (bits >> i) & Word{1}; }
  Mask& set(int i) {
    bits |= Word{1} << i;
    return *this;
  }
  int count() const { return popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(Mask o) const { return (o.bits & ~bits) == 0; }

  friend Mask operator|(Mask a, Mask b) { return Mask{a.bits | b.bits}; }
  friend Mask operator&(Mask a, Mask b) { return Mask{a.bits & b.bits}; }
  friend Mask operator-(Mask a, Mask b) { return Mask{a.bits & ~b.bits}; }
  friend bool operator==(Mask a, Mask b) { return a.bits == b.bits; }
  friend bool operator<(Mask a, Mask b) { return a.bits < b.bits; }
};

// Iterate set bits: for (int i : BitRange(mask)) ...
struct BitRange {
  Word bits;
  explicit BitRange(Mask m) : bits(m.bits) {}
  struct It {
    Word w;
    int operator*() const { return lowest_bit(w); }
    It& operator++() {
      w &= w - 1;
      return *this;
    }
    bool operator!=(const It& o) const { return w != o.w; }
  };
  It begin() const { return It{bits}; }
  It end() const { return It{0}; }
};

struct NotABasis : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PivotOnNonEdge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadBasepoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotThreeConnected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Labeled binary matroid. The representation is kept in reduced row-echelon
// form with respect to the label order; rank equals the number of rows.
// Values are immutable after construction.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;

  // Columns given as bit vectors over `n_rows` rows.
  static BinaryMatroid from_columns(std::vector<std::string> labels,
                                    const std::vector<Word>& cols,
                                    std::size_t n_rows);
  static BinaryMatroid from_matrix(std::vector<std::string> labels,
                                   const Gf2Matrix& m);

  int size() const { return static_cast<int>(labels_.size()); }
  int rank() const { return rank_; }
  int corank() const { return size() - rank_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int position(std::string_view label) const;  // -1 when absent
  int position_checked(std::string_view label) const;

  Mask ground() const { return Mask::all(size()); }
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> names_of(Mask m) const;

  // Column i as a bit vector over the rank() rows of the internal rref.
  Word col(int i) const { return cols_[i]; }
  const std::vector<Word>& cols() const { return cols_; }
  const Gf2Matrix& rep() const { return rep_; }

  bool operator==(const BinaryMatroid& o) const {
    return labels_ == o.labels_ && cols_ == o.cols_;
  }

 private:
  std::vector<std::string> labels_;
  Gf2Matrix rep_;            // rref, rank() rows, size() columns
  std::vector<Word> cols_;   // column views of rep_
  int rank_ = 0;
};

// ---- rank machinery ------------------------------------------------------

// Incremental GF(2) column basis; insertions can be undone in LIFO order.
struct GaussBasis {
  Word vecs[64];
  int n = 0;

  Word reduce(Word v) const {
    for (int i = 0; i < n; ++i) {
      Word b = vecs[i];
      if (v & (b & -b)) v ^= b;
    }
    return v;
  }
  // Returns true when v was independent of the current span.
  bool add(Word v) {
    v = reduce(v);
    if (!v) return false;
    vecs[n++] = v;
    return true;
  }
  void pop() { --n; }
};

int rank_of(const BinaryMatroid& m, Mask x);

struct RankProfile {
  int rank = 0;
  int corank = 0;      // rank of x in the dual
  Mask closure;        // maximal superset of equal rank
  Mask coclosure;
  int lambda = 0;      // r(X) + r(E-X) - r(M)
};

RankProfile rank_profile(const BinaryMatroid& m, Mask x);

Mask closure_of(const BinaryMatroid& m, Mask x);
Mask coclosure_of(const BinaryMatroid& m, Mask x);
int lambda_of(const BinaryMatroid& m, Mask x);

// ---- basic constructions -------------------------------------------------

BinaryMatroid minor(const BinaryMatroid& m, Mask contract, Mask del);
BinaryMatroid dual(const BinaryMatroid& m);
BinaryMatroid restriction(const BinaryMatroid& m, Mask keep);

// Extension by one new column (over the rank() rows of m's rref).
BinaryMatroid extend_with_column(const BinaryMatroid& m, Word column,
                                 const std::string& label);
// Coextension by one new row: old columns get `row_bits` (positional) in the
// new row, and a fresh unit column is appended.
BinaryMatroid coextend_with_row(const BinaryMatroid& m, Mask row_bits,
                                const std::string& label);

// New element forming a circuit with `closes` (its column is the sum of
// theirs); a two-element `closes` yields a triangle completion.
BinaryMatroid extend_closing_circuit(const BinaryMatroid& m, Mask closes,
                                     const std::string& label);
// Coextension where {label} ∪ with2 becomes a cocircuit; with a 2-element
// `with2` this is the triad coextension. Throws when the set fails to be a
// cocircuit of the result.
BinaryMatroid coextend_into_cocircuit(const BinaryMatroid& m, Mask with2,
                                      const std::string& label);
// The unique coextension in which triangle ∪ {label} is a 4-element
// circuit-cocircuit.
BinaryMatroid quad_coextension(const BinaryMatroid& m, Mask triangle,
                               const std::string& label);

struct SiCoResult {
  BinaryMatroid result;
  // retained[i] = position in the input of the element that represents the
  // i-th element of the result.
  std::vector<int> retained;
};

enum class SiCoMode { simplify, cosimplify };
SiCoResult si_co(const BinaryMatroid& m, SiCoMode mode);
inline BinaryMatroid si(const BinaryMatroid& m) {
  return si_co(m, SiCoMode::simplify).result;
}
inline BinaryMatroid co(const BinaryMatroid& m) {
  return si_co(m, SiCoMode::cosimplify).result;
}

Mask loops_of(const BinaryMatroid& m);
Mask coloops_of(const BinaryMatroid& m);
bool is_simple(const BinaryMatroid& m);
bool is_cosimple(const BinaryMatroid& m);

// ---- circuits ------------------------------------------------------------

enum class CircuitMode { circuit, cocircuit };
std::vector<Mask> circuits_up_to(const BinaryMatroid& m, int size_cap,
                                 CircuitMode mode = CircuitMode::circuit);
inline std::vector<Mask> triangles_of(const BinaryMatroid& m) {
  std::vector<Mask> out;
  for (Mask c : circuits_up_to(m, 3)) {
    if (c.count() == 3) out.push_back(c);
  }
  return out;
}
inline std::vector<Mask> triads_of(const BinaryMatroid& m) {
  std::vector<Mask> out;
  for (Mask c : circuits_up_to(m, 3, CircuitMode::cocircuit)) {
    if (c.count() == 3) out.push_back(c);
  }
  return out;
}
bool is_circuit(const BinaryMatroid& m, Mask x);
bool is_cocircuit(const BinaryMatroid& m, Mask x);

// ---- connectivity --------------------------------------------------------

struct SeparationReport {
  int k = 0;          // the separation order: lambda(side_x) = k-1
  Mask side_x;
  bool vertical = false;
  int small_side_size = 0;
};

struct ConnectivityReport {
  bool is_3connected = false;
  bool is_internally_4connected = false;
  bool is_vertically_4connected = false;
  bool is_45_connected = false;
  bool is_almost_v4c = false;
  std::optional<SeparationReport> witness;  // a violating separation
};

ConnectivityReport connectivity_report(const BinaryMatroid& m);
bool is_3connected(const BinaryMatroid& m);
bool is_internally_4connected(const BinaryMatroid& m);
bool is_vertically_4connected(const BinaryMatroid& m);

// All partitions (X, E-X) with lambda(X) <= max_lambda, up to complement
// (the returned side contains position 0). Both sides nonempty.
std::vector<Mask> low_lambda_sides(const BinaryMatroid& m, int max_lambda);

// ---- fans and small separators --------------------------------------------

struct Fan {
  std::vector<int> order;  // a witnessing fan or cofan ordering
  bool starts_with_triangle = false;  // fan (true) vs cofan (false) ordering
  Mask elements;
  std::vector<int> good_elements;     // per the length-4/5 tables
};

enum class SeparatorKind { triad, fan_four_five, quad_closure, low_rank };

struct ClassifiedSeparator {
  Mask x;
  SeparatorKind kind;
  std::optional<Mask> quad;  // for quad_closure: the 4-element circuit-cocircuit
};

struct FanReport {
  std::vector<Fan> maximal_fans;
  std::vector<ClassifiedSeparator> small_separators;  // <=5-element 3-separators
};

// The classification branch requires a 3-connected input.
FanReport fans_and_small_separators(const BinaryMatroid& m,
                                    bool classify_separators = true);

// X ∩ cl(E−X), X ∩ cl*(E−X), X − cl(E−X).
Mask boundary_cl(const BinaryMatroid& m, Mask x);
Mask boundary_cocl(const BinaryMatroid& m, Mask x);
Mask interior(const BinaryMatroid& m, Mask x);

// ---- sums ------------------------------------------------------------------

// 2-sum along the unique shared label p; p must be neither a loop nor a
// coloop on either side.
BinaryMatroid two_sum(const BinaryMatroid& m1, const BinaryMatroid& m2,
                      const std::string& p);

}  // namespace mobius
