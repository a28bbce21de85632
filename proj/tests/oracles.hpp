#pragma once

// Test-only brute-force oracles, independent of the library's search paths.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mobius/matroid.hpp"

namespace oracles {

using mobius::BinaryMatroid;
using mobius::BitRange;
using mobius::Mask;
using mobius::Word;

// rank via the span size: a set of GF(2) vectors spans 2^rank sums
inline int rank_brute(const BinaryMatroid& m, Mask x) {
  std::set<Word> span;
  std::vector<int> elems;
  for (int i : BitRange(x)) elems.push_back(i);
  for (Word pick = 0; pick < (Word{1} << elems.size()); ++pick) {
    Word s = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if ((pick >> i) & 1) s ^= m.col(elems[static_cast<std::size_t>(i)]);
    span.insert(s);
  }
  int r = 0;
  while ((std::size_t{1} << r) < span.size()) ++r;
  return r;
}

// all circuits up to a size cap by direct subset scan
inline std::vector<Mask> circuits_brute(const BinaryMatroid& m, int cap) {
  std::vector<Mask> out;
  int n = m.size();
  for (Word s = 1; s < (Word{1} << n); ++s) {
    Mask x{s};
    if (x.count() > cap) continue;
    Word sum = 0;
    for (int i : BitRange(x)) sum ^= m.col(i);
    if (sum != 0) continue;
    bool minimal = true;
    for (Word t = (s - 1) & s; t; t = (t - 1) & s) {
      Word inner = 0;
      for (int i : BitRange(Mask{t})) inner ^= m.col(i);
      if (inner == 0) minimal = false;
      if (!minimal) break;
    }
    if (minimal) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits < b.bits;
  });
  return out;
}

// full circuit family (no cap) for the brute isomorphism test
inline std::set<Word> circuit_family(const BinaryMatroid& m) {
  std::set<Word> fam;
  for (Mask c : circuits_brute(m, m.size())) fam.insert(c.bits);
  return fam;
}

// isomorphism by checking all label bijections against the circuit families
inline bool iso_brute(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  std::set<Word> fa = circuit_family(a), fb = circuit_family(b);
  if (fa.size() != fb.size()) return false;
  int n = a.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (Word c : fa) {
      Word image = 0;
      for (int i : BitRange(Mask{c}))
        image |= Word{1} << perm[static_cast<std::size_t>(i)];
      if (!fb.count(image)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// minor test by plain removal recursion over (contract, delete) pairs,
// memoized on the pair itself; no canonization, compression, or
// connectivity shortcuts
struct BruteMinorSearch {
  const BinaryMatroid& host;
  const BinaryMatroid& target;
  std::set<std::pair<Word, Word>> seen;

  bool rec(Mask c, Mask d) {
    if (!seen.insert({c.bits, d.bits}).second) return false;
    BinaryMatroid cur = minor(host, c, d);
    if (cur.size() < target.size() || cur.rank() < target.rank() ||
        cur.corank() < target.corank())
      return false;
    if (cur.size() == target.size()) return iso_brute(cur, target);
    for (int i = 0; i < host.size(); ++i) {
      if (c.test(i) || d.test(i)) continue;
      if (rec(c, d | Mask::single(i))) return true;
      if (rec(c | Mask::single(i), d)) return true;
    }
    return false;
  }
};

inline bool has_minor_brute(const BinaryMatroid& m, const BinaryMatroid& n) {
  BruteMinorSearch s{m, n, {}};
  return s.rec(Mask{}, Mask{});
}

// random binary matroid with the given shape
inline BinaryMatroid random_matroid(std::mt19937_64& rng, int rank, int n) {
  std::vector<std::string> labels;
  std::vector<Word> cols;
  std::uniform_int_distribution<Word> dist(0, (Word{1} << rank) - 1);
  for (int i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    cols.push_back(dist(rng));
  }
  return BinaryMatroid::from_columns(std::move(labels), cols,
                                     static_cast<std::size_t>(rank));
}

}  // namespace oracles
