#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "brpic/brpic.hpp"
#include "brpic/config.hpp"
#include "brpic/error.hpp"
#include "brpic/families.hpp"

namespace brpic {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Invariant-factor lists d_1 | d_2 | ... with product n, each d_i > 1.
void factor_lists(int n, int least, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 1) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int d = least; d <= n; d += least) {
    if (d < 2 || n % d != 0) continue;
    // every later factor is a multiple of d
    const int rest = n / d;
    if (rest != 1 && rest % d != 0) continue;
    cur.push_back(d);
    factor_lists(rest, d, cur, out);
    cur.pop_back();
  }
}

std::string abelian_name(const std::vector<i64>& factors) {
  if (factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + std::string("Z/") + std::to_string(factors[i]);
  return s;
}

// A x| Z/2 with the generator acting by inversion.
GroupPtr generalized_dihedral(const GroupPtr& a, const std::string& name) {
  const int m = a->order();
  const int n = 2 * m;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int ax = x / 2, ex = x % 2, ay = y / 2, ey = y % 2;
      const int b = ex ? a->inv(ay) : ay;
      table[static_cast<std::size_t>(x) * n + y] = 2 * a->mul(ax, b) + (ex ^ ey);
    }
  return make_group(n, std::move(table), name, true);
}

std::vector<CatalogEntry> build_catalog(int n) {
  std::vector<CatalogEntry> raw;
  if (n == 1) return {{"1", cyclic_group(1)}};
  if (n == 6) raw.push_back({"S3", symmetric_group(3)});
  if (n == 12) raw.push_back({"A4", alternating_group(4)});
  if (n == 24) raw.push_back({"S4", symmetric_group(4)});
  std::vector<std::vector<int>> lists;
  std::vector<int> cur;
  factor_lists(n, 1, cur, lists);
  std::sort(lists.begin(), lists.end(), [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  std::vector<CatalogEntry> abelian;
  for (const auto& f : lists) {
    std::vector<i64> fi(f.begin(), f.end());
    abelian.push_back({abelian_name(fi), abelian_group(f)});
  }
  raw.insert(raw.end(), abelian.begin(), abelian.end());
  if (n % 2 == 0 && n >= 6) raw.push_back({"D" + std::to_string(n), dihedral_group(n)});
  if (n % 4 == 0 && n >= 8) raw.push_back({n == 8 ? "Q8" : "Dic" + std::to_string(n), dicyclic_group(n / 4)});
  for (int p = 2; p < n; ++p) {
    if (!is_prime(p) || n % p != 0) continue;
    const int q = n / p;
    if (is_prime(q) && q % p == 1) raw.push_back({"pq(" + std::to_string(p) + "," + std::to_string(q) + ")", pq_group(p, q)});
  }
  if (n % 2 == 0)
    for (const auto& a : build_catalog(n / 2))
      if (a.group->is_abelian() && a.group->order() > 2) raw.push_back({"Dih(" + a.name + ")", generalized_dihedral(a.group, "Dih")});
  // non-abelian entries times abelian groups
  for (int d = 6; d < n; ++d) {
    if (n % d != 0 || n / d < 2) continue;
    for (const auto& x : build_catalog(d)) {
      if (x.group->is_abelian()) continue;
      std::vector<std::vector<int>> small;
      std::vector<int> c;
      factor_lists(n / d, 1, c, small);
      for (const auto& f : small) {
        std::vector<i64> fi(f.begin(), f.end());
        raw.push_back({x.name + "x" + abelian_name(fi), direct_product(x.group, abelian_group(f)).group});
      }
    }
  }
  std::vector<CatalogEntry> out;
  for (auto& e : raw) {
    if (e.group->order() != n) continue;
    bool dup = false;
    for (const auto& o : out)
      if (is_isomorphic(o.group, e.group)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(e));
  }
  return out;
}

// Left cosets of h in x and the action of h on them.
std::set<std::vector<int>> coset_image(const GroupPtr& x, const Subgroup& h) {
  std::vector<int> coset(static_cast<std::size_t>(x->order()), -1);
  std::vector<int> reps;
  for (int g = 0; g < x->order(); ++g) {
    if (coset[g] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int k : h.elements()) coset[x->mul(g, k)] = id;
  }
  std::set<std::vector<int>> image;
  for (int k : h.elements()) {
    std::vector<int> p;
    for (int r : reps) p.push_back(coset[x->mul(k, r)]);
    image.insert(std::move(p));
  }
  return image;
}

std::vector<int> orbit_sizes(const std::set<std::vector<int>>& perms, std::size_t d) {
  std::vector<int> seen(d, 0), sizes;
  for (std::size_t s = 0; s < d; ++s) {
    if (seen[s]) continue;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = 1;
    int count = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++count;
      for (const auto& p : perms)
        if (!seen[p[v]]) {
          seen[p[v]] = 1;
          stack.push_back(p[v]);
        }
    }
    sizes.push_back(count);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Conjugate in Sym(d)? Exhaustive up to degree 8, orbit shapes beyond.
bool permutation_equivalent(const std::set<std::vector<int>>& a, const std::set<std::vector<int>>& b, std::size_t d) {
  if (a.size() != b.size()) return false;
  if (orbit_sizes(a, d) != orbit_sizes(b, d)) return false;
  if (d > 8) return true;
  std::vector<int> beta(d), binv(d);
  std::iota(beta.begin(), beta.end(), 0);
  do {
    for (std::size_t i = 0; i < d; ++i) binv[beta[i]] = static_cast<int>(i);
    bool all = true;
    for (const auto& p : a) {
      std::vector<int> q(d);
      for (std::size_t i = 0; i < d; ++i) q[beta[i]] = beta[p[i]];
      if (!b.count(q)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  } while (std::next_permutation(beta.begin(), beta.end()));
  return false;
}

}  // namespace

std::vector<CatalogEntry> catalog(int order) {
  if (order < 1) throw InvalidInput("catalog order must be positive");
  if (order > caps().catalog_order) throw CapExceeded("identification catalog stops at order " + std::to_string(caps().catalog_order));
  static std::map<int, std::vector<CatalogEntry>> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_catalog(order)).first;
  return it->second;
}

std::string describe_group(const GroupPtr& g) {
  if (g->is_abelian()) return abelian_name(abelian_structure(Subgroup::whole(g)).invariant_factors);
  if (g->order() <= caps().catalog_order)
    for (const auto& e : catalog(g->order()))
      if (is_isomorphic(e.group, g)) return e.name;
  return "group of order " + std::to_string(g->order());
}

const Identification& Analysis::identification() {
  if (ident_) return *ident_;
  Identification id;
  const i64 order = brpic_order();
  const auto& perm = permutation();
  const GroupPtr& a0g = a0().as_group();
  const std::size_t d = perm.domain.size();
  const std::size_t kernel = perm.kernel.size();
  const std::set<std::vector<int>> image(perm.image.begin(), perm.image.end());

  std::ostringstream c;
  c << "order " << order;
  id.constraints.push_back(c.str());
  id.constraints.push_back("subgroup A0 = " + describe_group(a0g) + " of index " + std::to_string(d));
  id.constraints.push_back("core of A0 has order " + std::to_string(kernel));
  id.constraints.push_back("A0 acts on L0 through " + std::to_string(image.size()) + " permutations");
  std::optional<int> census;
  if (bimodules_available()) {
    census = involutions();
    id.constraints.push_back(std::to_string(*census) + " solutions of x^2 = 1");
  }
  if (order > caps().catalog_order) {
    id.constraints.push_back("order exceeds the catalog");
    ident_ = std::move(id);
    return *ident_;
  }
  for (const auto& e : catalog(static_cast<int>(order))) {
    if (census && involution_count(e.group) != *census) continue;
    bool found = false;
    for (const auto& h : all_subgroups(e.group)) {
      if (h.order() != a0g->order()) continue;
      if (static_cast<std::size_t>(core(h).order()) != kernel) continue;
      if (!is_isomorphic(h.as_group(), a0g)) continue;
      if (!permutation_equivalent(image, coset_image(e.group, h), d)) continue;
      found = true;
      break;
    }
    if (found) id.survivors.push_back(e.name);
  }
  ident_ = std::move(id);
  return *ident_;
}

i64 orthogonal_oracle(const GroupPtr& a) {
  if (!a->is_abelian()) throw InvalidInput("the orthogonal oracle needs an abelian group");
  if (a->order() > 8) throw CapExceeded("the orthogonal oracle is limited to order 8");
  const auto s = abelian_structure(Subgroup::whole(a));
  const auto& d = s.invariant_factors;
  const std::size_t r = d.size();
  const i64 e = s.exponent;
  // Elements of A + dual(A) as coordinate vectors (u, w).
  std::vector<i64> factors(d);
  factors.insert(factors.end(), d.begin(), d.end());
  std::vector<std::vector<i64>> els;
  for_each_element(factors, [&](const std::vector<i64>& v) { els.push_back(v); });
  const auto q = [&](const std::vector<i64>& v) {
    i64 t = 0;
    for (std::size_t i = 0; i < r; ++i) t += v[i] * v[r + i] % e * (e / d[i]);
    return mod_pos(t, e);
  };
  const auto add = [&](const std::vector<i64>& x, const std::vector<i64>& y) {
    std::vector<i64> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % factors[i];
    return z;
  };
  const auto b = [&](const std::vector<i64>& x, const std::vector<i64>& y) { return mod_pos(q(add(x, y)) - q(x) - q(y), e); };
  const auto order_divides = [&](const std::vector<i64>& x, i64 k) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] * k % factors[i] != 0) return false;
    return true;
  };
  const std::size_t k = factors.size();
  std::vector<std::vector<i64>> basis(k, std::vector<i64>(k, 0));
  for (std::size_t i = 0; i < k; ++i) basis[i][i] = 1;
  std::vector<std::size_t> choice(k);
  i64 count = 0;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == k) {
      ++count;
      return;
    }
    for (std::size_t c = 0; c < els.size(); ++c) {
      const auto& x = els[c];
      if (!order_divides(x, factors[i]) || q(x) != q(basis[i])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = b(els[choice[j]], x) == b(basis[j], basis[i]);
      if (!ok) continue;
      choice[i] = c;
      extend(i + 1);
    }
  };
  extend(0);
  return count;
}

}  // namespace brpic
