#include "brpic/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "brpic/config.hpp"
#include "brpic/error.hpp"

namespace brpic {

// ---------------------------------------------------------------------------
// Modules and cochains

GModule GModule::trivial(GroupPtr group, i64 m) {
  if (m < 1) throw InvalidInput("module modulus must be positive");
  return GModule{std::move(group), {m}, {}};
}

GModule GModule::dual(const AbelianStructure& a, GroupPtr acting, const std::function<int(int)>& to_parent) {
  GModule m{acting, a.invariant_factors, {}};
  m.action.reserve(static_cast<std::size_t>(acting->order()));
  for (int h = 0; h < acting->order(); ++h) m.action.push_back(dual_action(a, to_parent(h)));
  m.validate();
  return m;
}

void GModule::apply(int g, const i64* v, i64* out) const noexcept {
  const std::size_t r = rank();
  if (action.empty()) {
    for (std::size_t i = 0; i < r; ++i) out[i] = mod_pos(v[i], moduli[i]);
    return;
  }
  const auto& m = action[g];
  for (std::size_t i = 0; i < r; ++i) {
    i64 s = 0;
    for (std::size_t j = 0; j < r; ++j) s = (s + m[i][j] * v[j]) % moduli[i];
    out[i] = mod_pos(s, moduli[i]);
  }
}

void GModule::validate() const {
  const std::size_t r = rank();
  if (action.empty()) return;
  const int n = group->order();
  if (static_cast<int>(action.size()) != n) throw InvalidInput("module action must list every group element");
  for (int g = 0; g < n; ++g)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (mod_pos(action[g][i][j] * moduli[j], moduli[i]) != 0)
          throw InvalidInput("module action is not well defined on the carrier");
        if (g == 0 && mod_pos(action[0][i][j] - (i == j ? 1 : 0), moduli[i]) != 0)
          throw InvalidInput("identity does not act trivially");
      }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto& gh = action[group->mul(g, h)];
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          i64 s = 0;
          for (std::size_t l = 0; l < r; ++l) s = (s + action[g][i][l] * action[h][l][j]) % moduli[i];
          if (mod_pos(s - gh[i][j], moduli[i]) != 0) throw InvalidInput("module action is not a homomorphism");
        }
    }
}

i64 GModule::order() const noexcept {
  i64 o = 1;
  for (i64 m : moduli) o *= m;
  return o;
}

Cochain1 Cochain1::zero(GroupPtr group, std::vector<i64> moduli) {
  const std::size_t sz = static_cast<std::size_t>(group->order()) * moduli.size();
  return Cochain1{std::move(group), std::move(moduli), std::vector<i64>(sz, 0)};
}

Cochain2 Cochain2::zero(GroupPtr group, std::vector<i64> moduli) {
  const std::size_t n = static_cast<std::size_t>(group->order());
  const std::size_t sz = n * n * moduli.size();
  return Cochain2{std::move(group), std::move(moduli), std::vector<i64>(sz, 0)};
}

Cochain2 operator+(const Cochain2& f, const Cochain2& g) {
  if (f.values.size() != g.values.size() || f.moduli != g.moduli) throw InvalidInput("cochains do not match");
  Cochain2 out = f;
  const std::size_t r = f.rank();
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = (f.values[k] + g.values[k]) % f.moduli[k % r];
  return out;
}

Cochain2 operator-(const Cochain2& f) { return scale(f, -1); }

Cochain2 scale(const Cochain2& f, i64 k) {
  Cochain2 out = f;
  const std::size_t r = f.rank();
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = mod_pos(f.values[i] * k, f.moduli[i % r]);
  return out;
}

Cochain2 coboundary(const GModule& m, const Cochain1& lambda) {
  const int n = m.group->order();
  const std::size_t r = m.rank();
  Cochain2 out = Cochain2::zero(m.group, m.moduli);
  std::vector<i64> tmp(r);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      m.apply(g, &lambda.values[static_cast<std::size_t>(h) * r], tmp.data());
      const int gh = m.group->mul(g, h);
      for (std::size_t i = 0; i < r; ++i) out.at(g, h, i) = mod_pos(tmp[i] - lambda(gh, i) + lambda(g, i), m.moduli[i]);
    }
  return out;
}

namespace {

bool identity_holds(const GModule& m, const Cochain2& f, int a, int b, int c, std::vector<i64>& tmp) {
  const auto& g = *m.group;
  const std::size_t r = m.rank();
  m.apply(a, &f.values[f.index(b, c)], tmp.data());
  const int ab = g.mul(a, b), bc = g.mul(b, c);
  for (std::size_t i = 0; i < r; ++i)
    if (mod_pos(tmp[i] - f(ab, c, i) + f(a, bc, i) - f(a, b, i), m.moduli[i]) != 0) return false;
  return true;
}

}  // namespace

bool is_cocycle(const GModule& m, const Cochain2& f) {
  const int n = m.group->order();
  std::vector<i64> tmp(m.rank());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!identity_holds(m, f, a, b, c, tmp)) return false;
  return true;
}

bool satisfies_generator_identity(const GModule& m, const Cochain2& f, const std::vector<int>& gens) {
  const int n = m.group->order();
  std::vector<i64> tmp(m.rank());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x : gens)
        if (!identity_holds(m, f, a, b, x, tmp)) return false;
  return true;
}

bool is_crossed_hom(const GModule& m, const Cochain1& f) {
  const int n = m.group->order();
  const std::size_t r = m.rank();
  std::vector<i64> tmp(r);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      m.apply(g, &f.values[static_cast<std::size_t>(h) * r], tmp.data());
      const int gh = m.group->mul(g, h);
      for (std::size_t i = 0; i < r; ++i)
        if (mod_pos(f(g, i) + tmp[i] - f(gh, i), m.moduli[i]) != 0) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Spanning tree

SpanningTree::SpanningTree(GroupPtr group, std::vector<int> gens) : group_(std::move(group)) {
  for (int x : gens)
    if (x != 0 && std::find(gens_.begin(), gens_.end(), x) == gens_.end()) gens_.push_back(x);
  const int n = group_->order();
  const std::size_t k = gens_.size();
  parent_.assign(static_cast<std::size_t>(n), -1);
  via_.assign(static_cast<std::size_t>(n), -1);
  parent_[0] = 0;
  order_ = {0};
  for (std::size_t h = 0; h < order_.size(); ++h) {
    const int x = order_[h];
    for (std::size_t j = 0; j < k; ++j) {
      const int y = group_->mul(x, gens_[j]);
      if (parent_[y] < 0) {
        parent_[y] = x;
        via_[y] = static_cast<int>(j);
        order_.push_back(y);
      }
    }
  }
  if (static_cast<int>(order_.size()) != n) throw InvalidInput("elements do not generate the group");
  edge_.assign(static_cast<std::size_t>(n) * k, -1);
  for (int g = 0; g < n; ++g)
    for (std::size_t j = 0; j < k; ++j) {
      const int y = group_->mul(g, gens_[j]);
      const bool tree = y != 0 && parent_[y] == g && via_[y] == static_cast<int>(j);
      if (!tree) {
        edge_[static_cast<std::size_t>(g) * k + j] = static_cast<int>(edges_.size());
        edges_.emplace_back(g, static_cast<int>(j));
      }
    }
}

// ---------------------------------------------------------------------------
// H^1

H1::H1(GModule m) : module_(std::move(m)), tree_(module_.group, small_generating_set(module_.group)) {
  const int n = module_.group->order();
  const std::size_t r = module_.rank(), k = tree_.gens().size(), cols = k * r;
  std::vector<i64> umod(cols);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < r; ++l) umod[j * r + l] = module_.moduli[l];

  // phi[c] : r x cols coefficients of f(c) in the unknowns f(x_j).
  std::vector<Matrix> phi(static_cast<std::size_t>(n), Matrix(r, std::vector<i64>(cols, 0)));
  for (std::size_t h = 1; h < tree_.order().size(); ++h) {
    const int c = tree_.order()[h], p = tree_.parent(c), v = tree_.via(c);
    phi[c] = phi[p];
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t l = 0; l < r; ++l)
        phi[c][i][v * r + l] = mod_pos(phi[c][i][v * r + l] + module_.coeff(p, i, l), module_.moduli[i]);
  }
  Matrix rows;
  std::vector<i64> rmod;
  for (std::size_t e = 0; e < tree_.edge_count(); ++e) {
    const auto [g, j] = tree_.edge_ends(e);
    const int gx = module_.group->mul(g, tree_.gens()[j]);
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<i64> row(cols);
      bool nonzero = false;
      for (std::size_t c = 0; c < cols; ++c) {
        row[c] = mod_pos(phi[gx][i][c] - phi[g][i][c], module_.moduli[i]);
      }
      for (std::size_t l = 0; l < r; ++l)
        row[j * r + l] = mod_pos(row[j * r + l] - module_.coeff(g, i, l), module_.moduli[i]);
      for (i64 v : row) nonzero = nonzero || v != 0;
      if (nonzero) {
        rows.push_back(std::move(row));
        rmod.push_back(module_.moduli[i]);
      }
    }
  }
  Matrix boundaries;
  for (std::size_t l = 0; l < r; ++l) {
    std::vector<i64> b(cols);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < r; ++i)
        b[j * r + i] = mod_pos(module_.coeff(tree_.gens()[j], i, l) - (i == l ? 1 : 0), module_.moduli[i]);
    boundaries.push_back(std::move(b));
  }
  lin_ = LinearSubquotient(umod, rows, rmod, boundaries);
}

std::vector<i64> H1::classify(const Cochain1& f) const {
  const std::size_t r = module_.rank();
  std::vector<i64> u;
  for (int x : tree_.gens())
    for (std::size_t i = 0; i < r; ++i) u.push_back(f(x, i));
  return lin_.coordinates(u);
}

Cochain1 H1::representative(const std::vector<i64>& coords) const {
  const auto u = lin_.lift(coords);
  const std::size_t r = module_.rank();
  Cochain1 f = Cochain1::zero(module_.group, module_.moduli);
  std::vector<i64> tmp(r);
  for (std::size_t h = 1; h < tree_.order().size(); ++h) {
    const int c = tree_.order()[h], p = tree_.parent(c), v = tree_.via(c);
    module_.apply(p, &u[static_cast<std::size_t>(v) * r], tmp.data());
    for (std::size_t i = 0; i < r; ++i)
      f.values[static_cast<std::size_t>(c) * r + i] = (f(p, i) + tmp[i]) % module_.moduli[i];
  }
  return f;
}

// ---------------------------------------------------------------------------
// H^2

H2::H2(GModule m) : module_(std::move(m)), tree_(module_.group, small_generating_set(module_.group)) {
  const auto& grp = *module_.group;
  const int n = grp.order();
  const std::size_t r = module_.rank(), k = tree_.gens().size(), edges = tree_.edge_count();
  const std::size_t cols = edges * r;
  std::vector<i64> umod(cols);
  for (std::size_t e = 0; e < edges; ++e)
    for (std::size_t i = 0; i < r; ++i) umod[e * r + i] = module_.moduli[i];

  // Residual gauge: lambda fixed by its values on the generators.
  boundary_.assign(cols, std::vector<i64>(k * r, 0));
  Matrix boundaries;
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t l = 0; l < r; ++l) {
      std::vector<i64> lam(static_cast<std::size_t>(n) * r, 0), tmp(r), unit(r, 0);
      unit[l] = 1;
      for (std::size_t h = 1; h < tree_.order().size(); ++h) {
        const int c = tree_.order()[h], p = tree_.parent(c), v = tree_.via(c);
        if (static_cast<std::size_t>(v) != s) {
          for (std::size_t i = 0; i < r; ++i) lam[c * r + i] = lam[p * r + i];
          continue;
        }
        module_.apply(p, unit.data(), tmp.data());
        for (std::size_t i = 0; i < r; ++i) lam[c * r + i] = (lam[p * r + i] + tmp[i]) % module_.moduli[i];
      }
      std::vector<i64> b(cols, 0);
      for (std::size_t e = 0; e < edges; ++e) {
        const auto [g, j] = tree_.edge_ends(e);
        const int gx = grp.mul(g, tree_.gens()[j]);
        module_.apply(g, &lam[static_cast<std::size_t>(tree_.gens()[j]) * r], tmp.data());
        for (std::size_t i = 0; i < r; ++i) {
          b[e * r + i] = mod_pos(tmp[i] - lam[gx * r + i] + lam[g * r + i], module_.moduli[i]);
          boundary_[e * r + i][s * r + l] = b[e * r + i];
        }
      }
      boundaries.push_back(std::move(b));
    }

  Matrix rows;
  std::vector<i64> rmod;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto add_equations = [&](int a) {
    used[a] = 1;
    for (int g = 0; g < n; ++g) {
      const int ag = grp.mul(a, g);
      for (std::size_t j = 0; j < k; ++j) {
        const int gx = grp.mul(g, tree_.gens()[j]);
        const int e1 = tree_.edge(g, j), e2 = tree_.edge(ag, j);
        for (std::size_t i = 0; i < r; ++i) {
          std::vector<i64> row(cols, 0);
          if (e1 >= 0)
            for (std::size_t l = 0; l < r; ++l) row[e1 * r + l] += module_.coeff(a, i, l);
          if (e2 >= 0) row[e2 * r + i] -= 1;
          for (int c = gx; c != 0; c = tree_.parent(c)) {
            const int e = tree_.edge(grp.mul(a, tree_.parent(c)), static_cast<std::size_t>(tree_.via(c)));
            if (e >= 0) row[e * r + i] += 1;
          }
          for (int c = g; c != 0; c = tree_.parent(c)) {
            const int e = tree_.edge(grp.mul(a, tree_.parent(c)), static_cast<std::size_t>(tree_.via(c)));
            if (e >= 0) row[e * r + i] -= 1;
          }
          bool nonzero = false;
          for (auto& v : row) {
            v = mod_pos(v, module_.moduli[i]);
            nonzero = nonzero || v != 0;
          }
          if (nonzero) {
            rows.push_back(std::move(row));
            rmod.push_back(module_.moduli[i]);
          }
        }
      }
    }
  };
  for (int x : tree_.gens()) add_equations(x);

  while (true) {
    ++rounds_;
    lin_ = LinearSubquotient(umod, rows, rmod, boundaries);
    std::vector<int> failing;
    std::vector<i64> tmp(r);
    for (const auto& t : lin_.kernel_generators()) {
      const Cochain2 f = expand(t);
      for (int a = 0; a < n; ++a) {
        if (std::find(failing.begin(), failing.end(), a) != failing.end()) continue;
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
          for (int x : tree_.gens())
            if (!identity_holds(module_, f, a, g, x, tmp)) {
              ok = false;
              break;
            }
        if (!ok) failing.push_back(a);
      }
    }
    if (failing.empty()) break;
    bool added = false;
    for (int a : failing)
      if (!used[a]) {
        add_equations(a);
        added = true;
      }
    if (!added) throw ConsistencyError("cocycle equations fail to converge");
  }
}

std::vector<i64> H2::gauge(const Values& f, std::vector<i64>* lambda) const {
  const auto& grp = *module_.group;
  const std::size_t r = module_.rank();
  std::vector<i64> lam(static_cast<std::size_t>(grp.order()) * r, 0);
  for (std::size_t h = 1; h < tree_.order().size(); ++h) {
    const int c = tree_.order()[h], p = tree_.parent(c), v = tree_.via(c);
    for (std::size_t i = 0; i < r; ++i)
      lam[c * r + i] = mod_pos(lam[p * r + i] + f(p, tree_.gens()[v], i), module_.moduli[i]);
  }
  std::vector<i64> t(tree_.edge_count() * r);
  for (std::size_t e = 0; e < tree_.edge_count(); ++e) {
    const auto [g, j] = tree_.edge_ends(e);
    const int x = tree_.gens()[j], gx = grp.mul(g, x);
    for (std::size_t i = 0; i < r; ++i)
      t[e * r + i] = mod_pos(f(g, x, i) - lam[gx * r + i] + lam[g * r + i], module_.moduli[i]);
  }
  if (lambda) *lambda = std::move(lam);
  return t;
}

Cochain2 H2::expand(const std::vector<i64>& t) const {
  const auto& grp = *module_.group;
  const int n = grp.order();
  const std::size_t r = module_.rank();
  Cochain2 f = Cochain2::zero(module_.group, module_.moduli);
  for (int a = 0; a < n; ++a)
    for (std::size_t h = 1; h < tree_.order().size(); ++h) {
      const int c = tree_.order()[h], p = tree_.parent(c);
      const int e = tree_.edge(grp.mul(a, p), static_cast<std::size_t>(tree_.via(c)));
      for (std::size_t i = 0; i < r; ++i)
        f.at(a, c, i) = e < 0 ? f(a, p, i) : (f(a, p, i) + t[e * r + i]) % module_.moduli[i];
    }
  return f;
}

std::vector<i64> H2::classify(const Values& f) const { return lin_.coordinates(gauge(f, nullptr)); }

std::vector<i64> H2::classify(const Cochain2& f) const {
  return classify([&f](int a, int b, std::size_t i) { return f(a, b, i); });
}

Cochain2 H2::representative(const std::vector<i64>& coords) const { return expand(lin_.lift(coords)); }

std::optional<Cochain1> H2::coboundary_witness(const Cochain2& f, const Cochain2& g) const {
  const Cochain2 h = f + (-g);
  std::vector<i64> lam0;
  const auto t = gauge([&h](int a, int b, std::size_t i) { return h(a, b, i); }, &lam0);
  const std::size_t r = module_.rank(), k = tree_.gens().size();
  std::vector<i64> umod(k * r), rmod(t.size());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < r; ++l) umod[j * r + l] = module_.moduli[l];
  for (std::size_t e = 0; e < tree_.edge_count(); ++e)
    for (std::size_t i = 0; i < r; ++i) rmod[e * r + i] = module_.moduli[i];
  bool ok = false;
  const auto alpha = solve_linear(umod, boundary_, rmod, t, &ok);
  if (!ok) return std::nullopt;
  // lambda_alpha from its generator values, then lambda = lambda_alpha - lambda0.
  const auto& grp = *module_.group;
  Cochain1 lam = Cochain1::zero(module_.group, module_.moduli);
  std::vector<i64> tmp(r);
  for (std::size_t hh = 1; hh < tree_.order().size(); ++hh) {
    const int c = tree_.order()[hh], p = tree_.parent(c), v = tree_.via(c);
    module_.apply(p, &alpha[static_cast<std::size_t>(v) * r], tmp.data());
    for (std::size_t i = 0; i < r; ++i)
      lam.values[static_cast<std::size_t>(c) * r + i] = (lam(p, i) + tmp[i]) % module_.moduli[i];
  }
  for (int c = 0; c < grp.order(); ++c)
    for (std::size_t i = 0; i < r; ++i) {
      auto& v = lam.values[static_cast<std::size_t>(c) * r + i];
      v = mod_pos(v - lam0[static_cast<std::size_t>(c) * r + i], module_.moduli[i]);
    }
  if (coboundary(module_, lam).values != h.values) throw ConsistencyError("coboundary witness does not verify");
  return lam;
}

// ---------------------------------------------------------------------------
// Schur multiplier

Cochain2 connecting_map(const GroupPtr& g, const std::vector<i64>& chi, i64 n) {
  Cochain2 f = Cochain2::zero(g, {n});
  const int m = g->order();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const i64 carry = mod_pos(chi[a], n) + mod_pos(chi[b], n) - mod_pos(chi[g->mul(a, b)], n);
      if (carry % n != 0) throw InvalidInput("values do not define a homomorphism");
      f.at(a, b) = mod_pos(carry / n, n);
    }
  return f;
}

SchurMultiplier::SchurMultiplier(GroupPtr group, i64 modulus)
    : group_(std::move(group)), modulus_(modulus > 0 ? modulus : group_->order()) {
  if (modulus_ % group_->order() != 0) throw InvalidInput("Schur modulus must be a multiple of the group order");
  h2_ = std::make_shared<const H2>(GModule::trivial(group_, modulus_));
  const H1 hom(GModule::trivial(group_, modulus_));
  hom_order_ = hom.order();
  Matrix rels;
  for (std::size_t j = 0; j < hom.factors().size(); ++j) {
    std::vector<i64> e(hom.factors().size(), 0);
    e[j] = 1;
    rels.push_back(h2_->classify(connecting_map(group_, hom.representative(e).values, modulus_)));
  }
  quotient_ = AbelianQuotient(h2_->factors(), rels);
  for (std::size_t j = 0; j < quotient_.factors().size(); ++j) lifts_.push_back(h2_->representative(quotient_.lift(j)));
}

std::vector<i64> SchurMultiplier::classify(const H2::Values& f) const { return quotient_.coordinates(h2_->classify(f)); }

std::vector<i64> SchurMultiplier::classify(const Cochain2& f) const { return quotient_.coordinates(h2_->classify(f)); }

Cochain2 SchurMultiplier::representative(const std::vector<i64>& coords) const {
  Cochain2 f = Cochain2::zero(group_, {modulus_});
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) f = f + scale(lifts_[j], coords[j]);
  return f;
}

std::vector<std::vector<i64>> SchurMultiplier::elements() const {
  std::vector<std::vector<i64>> out;
  for_each_element(factors(), [&](const std::vector<i64>& c) { out.push_back(c); });
  return out;
}

// ---------------------------------------------------------------------------
// Restriction, pullback, bicharacters

Cochain2 restrict(const Cochain2& f, const Subgroup& h) {
  auto hg = h.as_group();
  Cochain2 out = Cochain2::zero(hg, f.moduli);
  const auto& el = h.elements();
  for (int i = 0; i < h.order(); ++i)
    for (int j = 0; j < h.order(); ++j)
      for (std::size_t c = 0; c < f.rank(); ++c) out.at(i, j, c) = f(el[i], el[j], c);
  return out;
}

Cochain2 pullback(const Cochain2& f, const GroupMap& theta) {
  if (!theta.is_bijective()) throw InvalidInput("pullback needs a bijective map");
  if (theta.source->order() != f.group->order()) throw InvalidInput("pullback map does not start at the cochain's group");
  const auto inv = theta.inverse();
  Cochain2 out = Cochain2::zero(theta.target, f.moduli);
  const int n = f.group->order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (std::size_t c = 0; c < f.rank(); ++c) out.at(x, y, c) = f(inv(x), inv(y), c);
  return out;
}

Cochain2 conjugate_cochain(const Cochain2& f, int g) { return pullback(f, inner_automorphism(f.group, g)); }

bool AlternatingBicharacter::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](i64 v) { return v == 0; });
}

AlternatingBicharacter alt_bicharacter(const Cochain2& f, const Subgroup& l1, const Subgroup& l2) {
  if (f.rank() != 1) throw InvalidInput("alternating forms need scalar coefficients");
  const auto& g = *l1.parent();
  AlternatingBicharacter b{l1, l2, f.moduli[0], std::vector<i64>(static_cast<std::size_t>(l1.order()) * l2.order())};
  for (int i = 0; i < l1.order(); ++i)
    for (int j = 0; j < l2.order(); ++j) {
      const int x = l1.elements()[i], y = l2.elements()[j];
      if (g.mul(x, y) != g.mul(y, x)) throw InvalidInput("alternating form on non-commuting subgroups");
      b.values[static_cast<std::size_t>(i) * l2.order() + j] = mod_pos(f(x, y) - f(y, x), b.modulus);
    }
  return b;
}

bool is_nondegenerate(const AlternatingBicharacter& b) {
  const int m = b.left.order(), k = b.right.order();
  for (int i = 1; i < m; ++i) {
    bool hit = false;
    for (int j = 0; j < k && !hit; ++j) hit = b.values[static_cast<std::size_t>(i) * k + j] != 0;
    if (!hit) return false;
  }
  for (int j = 1; j < k; ++j) {
    bool hit = false;
    for (int i = 0; i < m && !hit; ++i) hit = b.values[static_cast<std::size_t>(i) * k + j] != 0;
    if (!hit) return false;
  }
  return true;
}

bool is_bilinear(const AlternatingBicharacter& b) {
  const auto& g = *b.left.parent();
  for (int x : b.left.elements())
    for (int x2 : b.left.elements())
      for (int y : b.right.elements())
        if (mod_pos(b(g.mul(x, x2), y) - b(x, y) - b(x2, y), b.modulus) != 0) return false;
  for (int x : b.left.elements())
    for (int y : b.right.elements())
      for (int y2 : b.right.elements())
        if (mod_pos(b(x, g.mul(y, y2)) - b(x, y) - b(x, y2), b.modulus) != 0) return false;
  return true;
}

Cochain2 class_from_bicharacter(const AbelianStructure& a, const AlternatingBicharacter& b) {
  if (!(b.left == a.subject) || !(b.right == a.subject)) throw InvalidInput("form is not defined on the subject");
  for (int x : a.subject.elements())
    if (b(x, x) != 0) throw InvalidInput("form is not alternating");
  if (!is_bilinear(b)) throw InvalidInput("form is not bilinear");
  const std::size_t r = a.rank();
  Matrix bij(r, std::vector<i64>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) bij[i][j] = b(a.basis[i], a.basis[j]);
  auto hg = a.subject.as_group();
  Cochain2 out = Cochain2::zero(hg, {b.modulus});
  const auto& el = a.subject.elements();
  for (int x = 0; x < a.subject.order(); ++x)
    for (int y = 0; y < a.subject.order(); ++y) {
      const auto& cx = a.coordinates(el[x]);
      const auto& cy = a.coordinates(el[y]);
      i64 v = 0;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) v = (v + cx[i] * cy[j] % b.modulus * bij[i][j]) % b.modulus;
      out.at(x, y) = v;
    }
  return out;
}

std::optional<Cochain1> is_cohomologous(const H2& h, const Cochain2& f, const Cochain2& g) {
  if (f.moduli != g.moduli || f.values.size() != g.values.size()) throw InvalidInput("cochains do not match");
  return h.coboundary_witness(f, g);
}

// ---------------------------------------------------------------------------
// Semidirect products

std::string FiveTermReport::summary() const {
  std::ostringstream os;
  os << "|H2(G)|=" << h2_g << " |H2(T)|=" << h2_t << " |M~|=" << m_tilde << " |H1(T,N^)|=" << h1_t_dual
     << " |im res|=" << image_res << " |H2(N)^T|=" << invariant_h2_n << " |H2(T,N^)|=" << h2_t_dual;
  return os.str();
}

FiveTermReport five_term_check(const Subgroup& n, const Subgroup& t) {
  const auto& g = n.parent();
  if (!n.is_normal() || !n.is_abelian()) throw InvalidInput("kernel of the decomposition must be normal abelian");
  if (static_cast<long>(n.order()) * t.order() != g->order()) throw InvalidInput("orders do not multiply to |G|");
  for (int x : t.elements())
    if (x != 0 && n.contains(x)) throw InvalidInput("complement meets the normal subgroup");

  const i64 big = g->order();
  FiveTermReport rep;
  const SchurMultiplier sg(g, big);
  const auto tg = t.as_group();
  const auto ngrp = n.as_group();
  const SchurMultiplier st(tg, big);
  const SchurMultiplier sn(ngrp, big);
  rep.h2_g = sg.order();
  rep.h2_t = st.order();

  auto values_on = [](const Cochain2& f, const Subgroup& h) {
    return [&f, &h](int a, int b, std::size_t) { return f(h.elements()[a], h.elements()[b]); };
  };
  std::set<std::vector<i64>> image;
  for (const auto& e : sg.elements()) {
    const Cochain2 f = sg.representative(e);
    const auto rt = st.classify(values_on(f, t));
    if (std::any_of(rt.begin(), rt.end(), [](i64 v) { return v != 0; })) continue;
    ++rep.m_tilde;
    image.insert(sn.classify(values_on(f, n)));
  }
  rep.image_res = static_cast<i64>(image.size());

  std::set<std::vector<i64>> invariant;
  for (const auto& e : sn.elements()) {
    const Cochain2 mu = sn.representative(e);
    bool inv = true;
    for (int tau : t.elements()) {
      if (!inv) break;
      const int ti = g->inv(tau);
      const auto moved = sn.classify([&](int a, int b, std::size_t) {
        return mu(n.index_of(g->conj(ti, n.elements()[a])), n.index_of(g->conj(ti, n.elements()[b])));
      });
      inv = moved == e;
    }
    if (inv) invariant.insert(e);
  }
  rep.invariant_h2_n = static_cast<i64>(invariant.size());
  rep.image_invariant = std::includes(invariant.begin(), invariant.end(), image.begin(), image.end());

  const auto a = abelian_structure(n);
  const GModule dual = GModule::dual(a, tg, [&t](int i) { return t.elements()[i]; });
  rep.h1_t_dual = H1(dual).order();
  rep.h2_t_dual = H2(dual).order();

  rep.split = rep.h2_g == rep.h2_t * rep.m_tilde;
  rep.exact_left = rep.m_tilde == rep.h1_t_dual * rep.image_res;
  rep.exact_right = rep.image_res > 0 && rep.invariant_h2_n % rep.image_res == 0 &&
                    rep.h2_t_dual % (rep.invariant_h2_n / rep.image_res) == 0;
  return rep;
}

}  // namespace brpic

namespace brpic {

GroupPtr extension_group(const GModule& m, const Cochain2* nu, const std::string& name) {
  const int q = m.group->order();
  const std::size_t r = m.rank();
  const i64 mo = m.order();
  const i64 total = mo * q;
  if (total > caps().product_order) throw CapExceeded("extension group exceeds the product cap");
  std::vector<std::vector<i64>> vec(static_cast<std::size_t>(mo), std::vector<i64>(r));
  for (i64 v = 0; v < mo; ++v) {
    i64 x = v;
    for (std::size_t i = r; i-- > 0;) {
      vec[v][i] = x % m.moduli[i];
      x /= m.moduli[i];
    }
  }
  auto index_of = [&](const std::vector<i64>& v) {
    i64 x = 0;
    for (std::size_t i = 0; i < r; ++i) x = x * m.moduli[i] + mod_pos(v[i], m.moduli[i]);
    return x;
  };
  const int n = static_cast<int>(total);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<i64> tmp(r), sum(r);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int va = a / q, qa = a % q, vb = b / q, qb = b % q;
      m.apply(qa, vec[vb].data(), tmp.data());
      for (std::size_t i = 0; i < r; ++i) {
        sum[i] = vec[va][i] + tmp[i] + (nu ? (*nu)(qa, qb, i) : 0);
      }
      table[static_cast<std::size_t>(a) * n + b] = static_cast<int>(index_of(sum)) * q + m.group->mul(qa, qb);
    }
  return make_group(n, std::move(table), name);
}

}  // namespace brpic
