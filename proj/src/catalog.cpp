#include "mobius/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mobius/deltawye.hpp"
#include "mobius/isomin.hpp"

namespace mobius {

// ---- graphs -----------------------------------------------------------------

BinaryMatroid cycle_matroid(const GraphDesc& g) {
  std::vector<Word> cols;
  for (auto [u, v] : g.edges) {
    Word c = 0;
    if (u != v) c = (Word{1} << u) | (Word{1} << v);
    cols.push_back(c);
  }
  return BinaryMatroid::from_columns(g.edge_labels, cols,
                                     static_cast<std::size_t>(g.n_vertices));
}

BinaryMatroid bond_matroid(const GraphDesc& g) { return dual(cycle_matroid(g)); }

GraphDesc complete_graph(int n) {
  GraphDesc g;
  g.n_vertices = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      g.edges.push_back({i, j});
      g.edge_labels.push_back(std::to_string(i + 1) + "-" + std::to_string(j + 1));
    }
  return g;
}

GraphDesc complete_bipartite_33() {
  GraphDesc g;
  g.n_vertices = 6;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) {
      g.edges.push_back({i, j});
      g.edge_labels.push_back(std::to_string(i + 1) + "-" + std::to_string(j + 1));
    }
  return g;
}

GraphDesc cubic_mobius_ladder(int n_vertices) {
  if (n_vertices < 4 || n_vertices % 2 != 0)
    throw BadRank("cubic_mobius_ladder: need an even vertex count >= 4");
  int n = n_vertices / 2;
  GraphDesc g;
  g.n_vertices = n_vertices;
  auto mod = [&](int v) { return ((v % n_vertices) + n_vertices) % n_vertices; };
  for (int i = 1; i <= n; ++i) {
    g.edges.push_back({mod(i - 1), mod(i)});
    g.edge_labels.push_back("e" + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i) {
    g.edges.push_back({mod(i + n - 1), mod(i + n)});
    g.edge_labels.push_back("a" + std::to_string(i));
  }
  for (int i = 1; i <= n; ++i) {
    g.edges.push_back({mod(i), mod(i + n)});
    g.edge_labels.push_back("b" + std::to_string(i));
  }
  return g;
}

GraphDesc quartic_mobius_ladder(int n_vertices) {
  if (n_vertices < 3 || n_vertices % 2 == 0)
    throw BadRank("quartic_mobius_ladder: need an odd vertex count >= 3");
  int n = (n_vertices - 1) / 2;
  GraphDesc g;
  g.n_vertices = n_vertices;
  auto mod = [&](long long v) {
    return static_cast<int>(((v % n_vertices) + n_vertices) % n_vertices);
  };
  for (int i = 1; i <= n_vertices; ++i) {
    g.edges.push_back({mod(1LL * n * i), mod(1LL * n * i + 1)});
    g.edge_labels.push_back("e" + std::to_string(i));
  }
  for (int i = 1; i <= n_vertices; ++i) {
    g.edges.push_back({mod(1LL * n * (i - 1)), mod(1LL * n * i)});
    g.edge_labels.push_back("c" + std::to_string(i));
  }
  return g;
}

GraphDesc wheel_graph(int rim) {
  if (rim < 2) throw BadRank("wheel_graph: rim size >= 2");
  GraphDesc g;
  g.n_vertices = rim + 1;
  for (int i = 1; i <= rim; ++i) {
    g.edges.push_back({0, i});
    g.edge_labels.push_back("s" + std::to_string(i));
  }
  for (int i = 1; i <= rim; ++i) {
    g.edges.push_back({i, i % rim + 1});
    g.edge_labels.push_back("r" + std::to_string(i));
  }
  return g;
}

// ---- Moebius matroids ----------------------------------------------------------

BinaryMatroid triangular_mobius(int r) {
  if (r < 3) throw BadRank("triangular_mobius: rank >= 3");
  std::vector<std::string> labels;
  std::vector<Word> cols;
  auto e = [&](int i) { return Word{1} << (i - 1); };
  for (int i = 1; i <= r; ++i) {
    labels.push_back("e" + std::to_string(i));
    cols.push_back(e(i));
  }
  for (int i = 1; i <= r - 1; ++i) {
    labels.push_back("a" + std::to_string(i));
    cols.push_back(e(i) ^ e(r));
  }
  for (int i = 1; i <= r - 2; ++i) {
    labels.push_back("b" + std::to_string(i));
    cols.push_back(e(i) ^ e(i + 1));
  }
  labels.push_back("b" + std::to_string(r - 1));
  cols.push_back(e(1) ^ e(r - 1) ^ e(r));
  return BinaryMatroid::from_columns(std::move(labels), cols,
                                     static_cast<std::size_t>(r));
}

BinaryMatroid triadic_mobius(int r) {
  if (r < 4 || r % 2 != 0) throw BadRank("triadic_mobius: even rank >= 4");
  std::vector<std::string> labels;
  std::vector<Word> cols;
  auto e = [&](int i) { return Word{1} << (i - 1); };
  for (int i = 1; i <= r; ++i) {
    labels.push_back("e" + std::to_string(i));
    cols.push_back(e(i));
  }
  for (int i = 1; i <= r - 2; ++i) {
    labels.push_back("c" + std::to_string(i));
    cols.push_back(e(i) ^ e(i + 1) ^ e(r));
  }
  labels.push_back("c" + std::to_string(r - 1));
  cols.push_back(e(1) ^ e(r - 1) ^ e(r));
  return BinaryMatroid::from_columns(std::move(labels), cols,
                                     static_cast<std::size_t>(r));
}

BinaryMatroid fano() {
  static const BinaryMatroid m = triangular_mobius(3);
  return m;
}

BinaryMatroid fano_dual() {
  static const BinaryMatroid m = dual(fano());
  return m;
}

BinaryMatroid mk5() {
  static const BinaryMatroid m = cycle_matroid(complete_graph(5));
  return m;
}

BinaryMatroid mk33() {
  static const BinaryMatroid m = cycle_matroid(complete_bipartite_33());
  return m;
}

BinaryMatroid pg32() {
  static const BinaryMatroid m = [] {
    std::vector<std::string> labels;
    std::vector<Word> cols;
    for (Word v = 1; v <= 15; ++v) {
      labels.push_back("p" + std::to_string(v));
      cols.push_back(v);
    }
    return BinaryMatroid::from_columns(std::move(labels), cols, 4);
  }();
  return m;
}

BinaryMatroid delta4_plus() {
  static const BinaryMatroid m = [] {
    BinaryMatroid d4 = triangular_mobius(4);
    return quad_coextension(d4, d4.mask_of({"a1", "a2", "b1"}), "e5");
  }();
  return m;
}

const std::vector<BinaryMatroid>& cographic_excluded_minors() {
  static const std::vector<BinaryMatroid> ex = {fano(), fano_dual(), mk33(),
                                                mk5()};
  return ex;
}

// ---- sporadic constructions ------------------------------------------------------

namespace {

// the two 3-connected single-element extensions of the rank-4 triangular
// Moebius matroid, told apart by triangle count (12 vs 13)
std::pair<BinaryMatroid, BinaryMatroid> delta4_extension_pair() {
  BinaryMatroid d4 = triangular_mobius(4);
  std::vector<BinaryMatroid> classes;
  std::vector<CanonicalKey> keys;
  for (Word c = 1; c < 16; ++c) {
    BinaryMatroid ext = extend_with_column(d4, c, "x");
    if (!is_3connected(ext)) continue;
    CanonicalKey k = canonical_form(ext);
    if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
    keys.push_back(k);
    classes.push_back(ext);
  }
  if (classes.size() != 2)
    throw std::logic_error("delta4_extension_pair: expected two classes");
  int t0 = static_cast<int>(triangles_of(classes[0]).size());
  int t1 = static_cast<int>(triangles_of(classes[1]).size());
  if (t0 == 12 && t1 == 13) return {classes[0], classes[1]};
  if (t0 == 13 && t1 == 12) return {classes[1], classes[0]};
  throw std::logic_error("delta4_extension_pair: triangle census mismatch");
}

// Fano line systems by concurrency pattern: with k lines, the "a" variant
// has three through a common point, the "b" variant at most two.
TriangleMultiset fano_lines(std::size_t k, bool concurrent_triple) {
  std::vector<Mask> lines = triangles_of(fano());
  if (lines.size() != 7) throw std::logic_error("fano has seven lines");
  if (k >= 5) {
    TriangleMultiset out;
    for (std::size_t i = 0; i < k; ++i) out.members.push_back(lines[i]);
    return out;
  }
  std::vector<std::size_t> idx(lines.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::size_t> pick(k);
  std::vector<std::size_t> stack;
  // simple k-subset scan
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  for (;;) {
    int max_point = 0;
    for (int p = 0; p < 7; ++p) {
      int cnt = 0;
      for (std::size_t i : comb)
        if (lines[i].test(p)) ++cnt;
      max_point = std::max(max_point, cnt);
    }
    if ((concurrent_triple && max_point == 3) ||
        (!concurrent_triple && max_point <= 2)) {
      TriangleMultiset out;
      for (std::size_t i : comb) out.members.push_back(lines[i]);
      return out;
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == lines.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  throw std::logic_error("fano_lines: no subset with the required pattern");
}

BinaryMatroid build_sporadic(const std::string& id) {
  if (id == "mk5") return mk5();
  if (id == "c11") return delta4_extension_pair().first;
  if (id == "m4_11") return delta4_extension_pair().second;
  if (id == "c12") {
    BinaryMatroid pg = pg32();
    return minor(pg, Mask{}, pg.mask_of({"p1", "p2", "p3"}));  // a line
  }
  if (id == "d12") {
    BinaryMatroid pg = pg32();
    return minor(pg, Mask{}, pg.mask_of({"p1", "p2", "p4"}));  // a triangle-free triple
  }
  if (id == "m4_13") {
    BinaryMatroid pg = pg32();
    return minor(pg, Mask{}, pg.mask_of({"p1", "p2"}));
  }
  if (id == "m4_14") {
    BinaryMatroid pg = pg32();
    return minor(pg, Mask{}, pg.mask_of({"p1"}));
  }
  if (id == "m5_11") {
    BinaryMatroid host = sporadic("m4_11");
    std::vector<Mask> allowed = allowable_triangles(host);
    if (allowed.empty()) throw std::logic_error("m5_11: no allowable triangle");
    return delta_y(host, allowed.front());
  }
  if (id == "t12") {
    BinaryMatroid u6 = triadic_mobius(6);
    Word col = 0;
    for (int i = 1; i <= 5; ++i) col ^= u6.col(u6.position_checked("e" + std::to_string(i)));
    return extend_with_column(u6, col, "t");
  }
  if (id == "t12_contract") {
    BinaryMatroid t = sporadic("t12");
    return minor(t, Mask::single(0), Mask{});
  }
  if (id == "m5_12a") return nabla_multi(fano_dual(), fano_lines(4, true));
  if (id == "m6_13") return nabla_multi(fano_dual(), fano_lines(4, false));
  if (id == "m7_15") return nabla_multi(fano_dual(), fano_lines(5, false));
  if (id == "m9_18") return nabla_multi(fano_dual(), fano_lines(6, false));
  if (id == "m11_21") return nabla_multi(fano_dual(), fano_lines(7, false));
  if (id == "m5_12b") {
    BinaryMatroid d4 = triangular_mobius(4);
    BinaryMatroid m1 = coextend_into_cocircuit(d4, d4.mask_of({"a1", "a2"}), "x");
    return extend_closing_circuit(
        m1, Mask::single(m1.size() - 1) | Mask::single(m1.position_checked("a3")),
        "y");
  }
  if (id == "m5_13") {
    BinaryMatroid d4 = triangular_mobius(4);
    BinaryMatroid m1 = coextend_into_cocircuit(d4, d4.mask_of({"a1", "b1"}), "x");
    BinaryMatroid m2 = extend_closing_circuit(
        m1, Mask::single(m1.size() - 1) | Mask::single(m1.position_checked("b1")),
        "y");
    return extend_closing_circuit(
        m2,
        Mask::single(m1.size() - 1) | Mask::single(m2.position_checked("b3")),
        "z");
  }
  throw UnknownId("unknown sporadic id: " + id);
}

}  // namespace

const char* const kSporadicIds[18] = {
    "mk5",    "c11",    "m4_11", "m5_11", "t12_contract", "c12",
    "d12",    "m5_12a", "m5_12b", "t12",  "m4_13",        "m5_13",
    "m6_13",  "m4_14",  "pg32",   "m7_15", "m9_18",       "m11_21"};

BinaryMatroid sporadic(const std::string& id) {
  static std::map<std::string, BinaryMatroid> cache;
  static std::mutex mu;
  if (id == "pg32") return pg32();
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
  }
  // built outside the lock: construction recurses into other catalog entries
  BinaryMatroid m = build_sporadic(id);
  std::lock_guard<std::mutex> lk(mu);
  return cache.emplace(id, m).first->second;
}

BinaryMatroid graphic_source(const std::string& id, int param) {
  if (id == "mk33") return mk33();
  if (id == "mk5") return mk5();
  if (id == "cubic_ladder_bond") return bond_matroid(cubic_mobius_ladder(param));
  if (id == "quartic_ladder_bond")
    return bond_matroid(quartic_mobius_ladder(param));
  if (id == "wheel") return cycle_matroid(wheel_graph(param));
  throw UnknownId("unknown graphic source: " + id);
}

BinaryMatroid catalog_get(const std::string& token) {
  std::string name = token;
  int param = 0;
  auto open = token.find('(');
  if (open != std::string::npos && token.back() == ')') {
    name = token.substr(0, open);
    param = std::stoi(token.substr(open + 1, token.size() - open - 2));
  }
  if (name == "delta_r") return triangular_mobius(param);
  if (name == "upsilon_r") return triadic_mobius(param);
  if (name == "delta4_plus") return delta4_plus();
  if (name == "fano") return fano();
  if (name == "fano_dual") return fano_dual();
  if (name == "mk5") return mk5();
  if (name == "mk33") return mk33();
  if (name == "mstar_k33") return dual(mk33());
  if (name == "mstar_k5") return dual(mk5());
  if (name == "pg32") return pg32();
  if (name == "cubic_ladder_bond" || name == "quartic_ladder_bond" ||
      name == "wheel")
    return graphic_source(name, param);
  for (const char* s : kSporadicIds)
    if (name == s) return sporadic(name);
  throw UnknownId("unknown catalog token: " + token);
}

const std::vector<CensusEntry>& census() {
  static const std::vector<CensusEntry> table = [] {
    std::vector<std::pair<std::string, bool>> ids = {
        {"fano", false},        {"fano_dual", false}, {"delta_r(4)", false},
        {"mk5", true},          {"c11", true},        {"m4_11", true},
        {"m5_11", true},        {"t12_contract", true}, {"upsilon_r(6)", false},
        {"c12", true},          {"d12", true},        {"m5_12a", true},
        {"m5_12b", true},       {"t12", true},        {"m4_13", true},
        {"delta_r(5)", false},  {"m5_13", true},      {"m6_13", true},
        {"m4_14", true},        {"pg32", true},       {"m7_15", true},
        {"upsilon_r(8)", false},{"delta_r(6)", false},{"m9_18", true},
        {"delta_r(7)", false},  {"upsilon_r(10)", false}, {"m11_21", true}};
    std::vector<CensusEntry> out;
    for (auto& [id, spor] : ids) {
      BinaryMatroid m = catalog_get(id);
      ConnectivityReport rep = connectivity_report(m);
      CensusEntry e;
      e.id = id;
      e.rank = m.rank();
      e.size = m.size();
      e.sporadic = spor;
      e.internally_4connected = rep.is_internally_4connected;
      e.vertically_4connected = rep.is_vertically_4connected;
      e.triad_count = static_cast<int>(triads_of(m).size());
      out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
      if (a.size != b.size) return a.size < b.size;
      if (a.rank != b.rank) return a.rank < b.rank;
      return a.id < b.id;
    });
    return out;
  }();
  return table;
}

BinaryMatroid census_matroid(const std::string& id) { return catalog_get(id); }

}  // namespace mobius
