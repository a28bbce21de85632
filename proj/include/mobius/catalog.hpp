#pragma once

#include "mobius/matroid.hpp"

namespace mobius {

struct UnknownId : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadRank : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- graphs ----------------------------------------------------------------

struct GraphDesc {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> edge_labels;
};

BinaryMatroid cycle_matroid(const GraphDesc& g);
BinaryMatroid bond_matroid(const GraphDesc& g);

GraphDesc complete_graph(int n);
GraphDesc complete_bipartite_33();
// Rim/spoke labelings used for the ladder identities: e_i, a_i, b_i on the
// cubic ladder, e_i, c_i on the quartic one.
GraphDesc cubic_mobius_ladder(int n_vertices);    // even, >= 4
GraphDesc quartic_mobius_ladder(int n_vertices);  // odd, >= 3
GraphDesc wheel_graph(int rim);

// ---- named matroids ---------------------------------------------------------

BinaryMatroid triangular_mobius(int r);  // rank r >= 3, 3r-2 elements
BinaryMatroid triadic_mobius(int r);     // even rank r >= 4, 2r-1 elements
BinaryMatroid fano();
BinaryMatroid fano_dual();
BinaryMatroid mk5();
BinaryMatroid mk33();
BinaryMatroid pg32();
BinaryMatroid delta4_plus();
BinaryMatroid sporadic(const std::string& id);
BinaryMatroid graphic_source(const std::string& id, int param = 0);

const std::vector<BinaryMatroid>& cographic_excluded_minors();

// Token lookup covering every catalog id; parameterized ids take the form
// "delta_r(5)", "upsilon_r(6)", "cubic_ladder_bond(6)", "wheel(4)".
BinaryMatroid catalog_get(const std::string& token);

extern const char* const kSporadicIds[18];

struct CensusEntry {
  std::string id;
  int rank = 0;
  int size = 0;
  bool sporadic = false;
  bool internally_4connected = false;
  bool vertically_4connected = false;
  int triad_count = 0;
};

// The 27 internally 4-connected non-cographic matroids of rank <= 11 with no
// M(K33)-minor, flags computed from the constructions.
const std::vector<CensusEntry>& census();
BinaryMatroid census_matroid(const std::string& id);

}  // namespace mobius
