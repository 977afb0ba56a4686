#include "brpic/goursat.hpp"

#include <algorithm>

namespace brpic {

std::vector<GoursatTriple> goursat_full_subgroups(const GroupPtr& g, const GroupPtr& h, bool abelian_legs_only) {
  const auto legs = [&](const GroupPtr& x) { return abelian_legs_only ? normal_abelian_subgroups(x) : normal_subgroups(x); };
  const auto left = legs(g);
  const auto right = legs(h);
  std::vector<GoursatTriple> out;
  for (const auto& l1 : left) {
    const long idx1 = g->order() / l1.order();
    const Quotient q1 = quotient(l1);
    for (const auto& l2 : right) {
      if (h->order() / l2.order() != idx1) continue;
      const Quotient q2 = quotient(l2);
      for (auto& phi : isomorphisms(q1.group, q2.group)) out.push_back(GoursatTriple{l1, l2, q1, q2, std::move(phi)});
    }
  }
  return out;
}

Subgroup realize(const GoursatTriple& t, const Product& p) {
  const auto& g = t.l1.parent();
  const auto& h = t.l2.parent();
  std::vector<int> elems;
  elems.reserve(static_cast<std::size_t>(g->order()) * t.l2.order());
  for (int x = 0; x < g->order(); ++x) {
    const int target = t.phi(t.q1.projection(x));
    for (int y = 0; y < h->order(); ++y)
      if (t.q2.projection(y) == target) elems.push_back(p.pair(x, y));
  }
  return Subgroup(p.group, std::move(elems));
}

std::vector<Subgroup> full_projection_subgroups(const Product& p) {
  const int n = p.left.source->order(), m = p.right.source->order();
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(p.group)) {
    std::vector<char> a(static_cast<std::size_t>(n), 0), b(static_cast<std::size_t>(m), 0);
    for (int x : s.elements()) {
      a[p.first(x)] = 1;
      b[p.second(x)] = 1;
    }
    if (std::all_of(a.begin(), a.end(), [](char c) { return c; }) &&
        std::all_of(b.begin(), b.end(), [](char c) { return c; }))
      out.push_back(std::move(s));
  }
  return out;
}

}  // namespace brpic
