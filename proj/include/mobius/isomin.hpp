#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mobius/matroid.hpp"

namespace mobius {

// Bytes determined exactly by the isomorphism class.
using CanonicalKey = std::string;

struct CanonicalResult {
  CanonicalKey key;
  std::vector<int> order;  // positions of m in canonical order
};

CanonicalKey canonical_form(const BinaryMatroid& m);
CanonicalResult canonical_form_with_order(const BinaryMatroid& m);

// Canonical form of a colored matroid: isomorphisms must preserve colors.
// Used to keep a construction's distinguished elements (such as the element
// added by an extension) apart from the rest.
CanonicalKey canonical_form_colored(const BinaryMatroid& m,
                                    const std::vector<int>& colors);

// A label bijection realizing an isomorphism, or nothing.
std::optional<std::vector<std::pair<std::string, std::string>>> is_isomorphic(
    const BinaryMatroid& m, const BinaryMatroid& n);

struct MinorWitness {
  Mask contract_set;  // independent in m
  Mask delete_set;    // coindependent in m
  std::vector<std::pair<std::string, std::string>> iso_map;  // minor -> n
};

// Recheck a witness against the matroids it came from.
bool verify_minor_witness(const BinaryMatroid& m, const BinaryMatroid& n,
                          const MinorWitness& w);

// Exact minor test. Loops/parallel classes in n are handled by a plain
// branching search; 3-connected targets go through the compressed search.
std::optional<MinorWitness> has_minor(const BinaryMatroid& m,
                                      const BinaryMatroid& n);
bool has_minor_bool(const BinaryMatroid& m, const BinaryMatroid& n);

// M[X, B] = M / (B - X) \ (E - (B ∪ X)).
BinaryMatroid induced_minor(const BinaryMatroid& m,
                            const std::vector<std::string>& basis, Mask x);
int lambda_b(const BinaryMatroid& m, const std::vector<std::string>& basis,
             Mask x, Mask y);

struct NotExactSeparation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Blocking sequence of the exact k-separation (X, Y) of M[X ∪ Y, B], found by
// iterative deepening (so the minimality condition holds by construction and
// is rechecked). Returns element positions of m in order.
std::optional<std::vector<int>> find_blocking_sequence(
    const BinaryMatroid& m, const std::vector<std::string>& basis, Mask x,
    Mask y, int k);

// Does (X, Y) extend to a k-separation (X', Y') of m itself?
bool induces_k_separation(const BinaryMatroid& m, Mask x, Mask y, int k);

// Excluded-minor test: no minor among F7, F7*, M(K33), M(K5).
bool is_cographic(const BinaryMatroid& m);
bool is_graphic(const BinaryMatroid& m);

}  // namespace mobius
