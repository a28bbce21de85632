#include "mobius/gen.hpp"

#include <algorithm>

#include "mobius/catalog.hpp"

namespace mobius {

bool GenFilter::passes(const BinaryMatroid& m) const {
  if (simple && !is_simple(m)) return false;
  if (cosimple && !is_cosimple(m)) return false;
  if (three_connected && !is_3connected(m)) return false;
  if (internally_4c && !is_internally_4connected(m)) return false;
  if (vertically_4c && !is_vertically_4connected(m)) return false;
  for (const BinaryMatroid& n : excluded_minors)
    if (has_minor_bool(m, n)) return false;
  for (const BinaryMatroid& n : required_minors)
    if (!has_minor_bool(m, n)) return false;
  if (predicate && !predicate(m)) return false;
  return true;
}

std::vector<BinaryMatroid> generate(const BinaryMatroid& m, GenDirection dir,
                                    const GenFilter& f,
                                    const std::string& new_label) {
  std::vector<std::pair<CanonicalKey, BinaryMatroid>> found;
  auto consider = [&](BinaryMatroid cand) {
    if (!f.passes(cand)) return;
    // the added element is distinguished: two candidates coincide only when
    // an isomorphism carries new element to new element
    std::vector<int> colors(static_cast<std::size_t>(cand.size()), 0);
    colors.back() = 1;
    CanonicalKey k = canonical_form_colored(cand, colors);
    for (auto& [key, mat] : found)
      if (key == k) return;
    found.push_back({std::move(k), std::move(cand)});
  };

  if (dir == GenDirection::extend) {
    for (Word c = 1; c < (Word{1} << m.rank()); ++c)
      consider(extend_with_column(m, c, new_label));
  } else {
    BinaryMatroid d = dual(m);
    for (Word c = 1; c < (Word{1} << d.rank()); ++c)
      consider(dual(extend_with_column(d, c, new_label)));
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<BinaryMatroid> out;
  for (auto& [k, mat] : found) out.push_back(std::move(mat));
  return out;
}

bool is_splitter(const BinaryMatroid& m,
                 const std::vector<BinaryMatroid>& forbidden) {
  if (m.size() < 4 || !is_3connected(m))
    throw std::invalid_argument("is_splitter: need a 3-connected matroid on >= 4 elements");
  if (m.size() % 2 == 0 && m.rank() * 2 == m.size()) {
    BinaryMatroid w = cycle_matroid(wheel_graph(m.rank()));
    if (is_isomorphic(m, w)) throw IsAWheel("is_splitter: input is a wheel");
  }
  GenFilter f;
  f.three_connected = true;
  f.excluded_minors = forbidden;
  if (!generate(m, GenDirection::extend, f).empty()) return false;
  if (!generate(m, GenDirection::coextend, f).empty()) return false;
  return true;
}

ReduceStep reduce_step(const BinaryMatroid& m, const BinaryMatroid& n) {
  auto base = has_minor(m, n);
  if (!base || m.size() <= n.size())
    throw NotFound("reduce_step: target is not a proper minor");

  std::vector<int> order = canonical_form_with_order(m).order;

  // shape 1: a single deletion
  for (int x : order) {
    BinaryMatroid cand = minor(m, Mask{}, Mask::single(x));
    if (is_internally_4connected(cand) && has_minor_bool(cand, n))
      return {ReduceShape::delete_one, {m.label(x)}, cand, false};
  }
  // shape 2: one contraction, simplified
  for (int x : order) {
    BinaryMatroid cand = si(minor(m, Mask::single(x), Mask{}));
    if (m.size() - cand.size() > 3) continue;
    if (is_internally_4connected(cand) && has_minor_bool(cand, n))
      return {ReduceShape::contract_one, {m.label(x)}, cand, false};
  }
  // shapes 3 and 4: two or three contractions; either the contracted matroid
  // is vertically 4-connected or its simplification is internally
  // 4-connected, and both phrasings are accepted
  for (int budget : {2, 3}) {
    int allowed_drop = budget == 2 ? 3 : 4;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from) -> std::optional<ReduceStep> {
      if (static_cast<int>(pick.size()) == budget) {
        Mask c;
        for (int x : pick) c.set(x);
        if (rank_of(m, c) != budget) return std::nullopt;
        BinaryMatroid contracted = minor(m, c, Mask{});
        BinaryMatroid cand = si(contracted);
        if (m.size() - cand.size() > allowed_drop) return std::nullopt;
        bool v4c = is_vertically_4connected(contracted);
        bool i4c = is_internally_4connected(cand);
        if (!(v4c || i4c)) return std::nullopt;
        if (!is_internally_4connected(cand)) return std::nullopt;
        if (!has_minor_bool(cand, n)) return std::nullopt;
        ReduceStep step;
        step.shape = budget == 2 ? ReduceShape::contract_two
                                 : ReduceShape::contract_three;
        for (int x : pick) step.removed.push_back(m.label(x));
        step.result = cand;
        step.contraction_was_v4c = v4c;
        return step;
      }
      for (std::size_t i = from; i < order.size(); ++i) {
        pick.push_back(order[i]);
        auto r = self(self, i + 1);
        pick.pop_back();
        if (r) return r;
      }
      return std::nullopt;
    };
    auto r = rec(rec, 0);
    if (r) return *r;
  }
  throw NotFound("reduce_step: no reduction shape applies");
}

}  // namespace mobius
