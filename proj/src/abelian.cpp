#include "brpic/abelian.hpp"

#include "brpic/error.hpp"

namespace brpic {

AbelianStructure abelian_structure(const Subgroup& a) {
  if (!a.is_abelian()) throw InvalidInput("subgroup is not abelian");
  const auto& g = a.parent();
  const int n = a.order();

  // Greedy generators inside the subgroup and BFS exponent vectors.
  std::vector<int> gens;
  {
    std::vector<char> covered(static_cast<std::size_t>(g->order()), 0);
    covered[0] = 1;
    std::vector<int> els = a.elements();
    std::stable_sort(els.begin(), els.end(),
                     [&](int x, int y) { return g->element_order(x) > g->element_order(y); });
    for (int x : els) {
      if (covered[x]) continue;
      gens.push_back(x);
      for (int y : g->closure(gens)) covered[y] = 1;
    }
  }
  const std::size_t k = gens.size();
  std::vector<i64> orders;
  for (int x : gens) orders.push_back(g->element_order(x));

  std::vector<std::vector<i64>> raw(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{0};
  raw[0].assign(k, 0);
  seen[0] = 1;
  Matrix relations;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (std::size_t j = 0; j < k; ++j) {
      const int y = g->mul(x, gens[j]);
      const int py = a.index_of(y);
      auto step = raw[a.index_of(x)];
      step[j] = (step[j] + 1) % orders[j];
      if (!seen[py]) {
        seen[py] = 1;
        raw[py] = step;
        queue.push_back(y);
      } else {
        std::vector<i64> rel(k);
        for (std::size_t i = 0; i < k; ++i) rel[i] = step[i] - raw[py][i];
        relations.push_back(std::move(rel));
      }
    }
  }

  AbelianQuotient q(orders, relations);
  AbelianStructure out{a, q.factors(), {}, q.factors().empty() ? 1 : q.factors().back(), {}};
  auto element_of_raw = [&](const std::vector<i64>& c) {
    int e = 0;
    for (std::size_t i = 0; i < k; ++i) e = g->mul(e, g->power(gens[i], c[i]));
    return e;
  };
  for (std::size_t j = 0; j < out.invariant_factors.size(); ++j) out.basis.push_back(element_of_raw(q.lift(j)));
  out.coords_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.coords_[i] = q.coordinates(raw[i]);

  for (std::size_t j = 0; j < out.basis.size(); ++j)
    if (g->element_order(out.basis[j]) != out.invariant_factors[j])
      throw ConsistencyError("abelian basis element has the wrong order");
  for (int i = 0; i < n; ++i)
    if (out.element(out.coords_[i]) != a.elements()[i]) throw ConsistencyError("abelian coordinates do not round-trip");
  return out;
}

int AbelianStructure::element(const std::vector<i64>& c) const {
  const auto& g = subject.parent();
  int e = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) e = g->mul(e, g->power(basis[i], c[i]));
  return e;
}

i64 AbelianStructure::pair(int a, const std::vector<i64>& chi) const {
  const auto& c = coordinates(a);
  i64 v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v = (v + c[i] * chi[i] % exponent * (exponent / invariant_factors[i])) % exponent;
  return v;
}

Matrix dual_action(const AbelianStructure& a, int g) {
  const auto& grp = a.subject.parent();
  const std::size_t r = a.rank();
  Matrix m(r, std::vector<i64>(r, 0));
  const int ginv = grp->inv(g);
  for (std::size_t k = 0; k < r; ++k) {
    const auto& c = a.coordinates(grp->conj(ginv, a.basis[k]));
    const i64 dk = a.invariant_factors[k];
    for (std::size_t i = 0; i < r; ++i) {
      const i64 di = a.invariant_factors[i];
      const i64 v = di >= dk ? (c[i] * dk) / di : c[i] * (dk / di);
      m[k][i] = mod_pos(v, dk);
    }
  }
  return m;
}

}  // namespace brpic
