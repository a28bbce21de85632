#pragma once

#include <functional>

#include "mobius/isomin.hpp"
#include "mobius/matroid.hpp"

namespace mobius {

struct GenFilter {
  bool three_connected = false;
  bool internally_4c = false;
  bool vertically_4c = false;
  bool simple = false;
  bool cosimple = false;
  std::vector<BinaryMatroid> excluded_minors;
  std::vector<BinaryMatroid> required_minors;
  std::function<bool(const BinaryMatroid&)> predicate;

  bool passes(const BinaryMatroid& m) const;
};

enum class GenDirection { extend, coextend };

// All single-element extensions (new columns over the full span, duplicates
// included) or coextensions, filtered, one representative per isomorphism
// class, ordered by canonical key. The new element carries `new_label`.
std::vector<BinaryMatroid> generate(const BinaryMatroid& m, GenDirection dir,
                                    const GenFilter& f,
                                    const std::string& new_label = "x");

struct IsAWheel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splitter test: no 3-connected single-element extension or coextension stays
// inside the class excluding `forbidden`. Requires a 3-connected non-wheel
// input with at least four elements.
bool is_splitter(const BinaryMatroid& m,
                 const std::vector<BinaryMatroid>& forbidden);

struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ReduceShape { delete_one, contract_one, contract_two, contract_three };

struct ReduceStep {
  ReduceShape shape;
  std::vector<std::string> removed;
  BinaryMatroid result;  // internally 4-connected with an n-minor
  bool contraction_was_v4c = false;  // which phrasing held for shapes 3 and 4
};

// Search the four reduction shapes in order; the first internally
// 4-connected outcome carrying an n-minor within the size budget wins.
ReduceStep reduce_step(const BinaryMatroid& m, const BinaryMatroid& n);

}  // namespace mobius
