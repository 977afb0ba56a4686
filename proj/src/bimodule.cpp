#include "brpic/bimodule.hpp"

#include <algorithm>
#include <numeric>

#include "brpic/config.hpp"
#include "brpic/error.hpp"

namespace brpic {

namespace {

// Subgroup generators as parent indices.
std::vector<int> subgroup_gens(const Subgroup& s) {
  std::vector<int> out;
  for (int i : small_generating_set(s.as_group())) out.push_back(s.elements()[i]);
  return out;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

BimoduleClassification::BimoduleClassification(GroupPtr g) : g_(std::move(g)) {
  if (g_->order() > caps().bimodule_order)
    throw CapExceeded("bimodule enumeration is limited to order " + std::to_string(caps().bimodule_order));
  gop_ = opposite(g_);
  p_ = direct_product(g_, gop_);
  for (int x : g_->generators()) product_gens_.push_back(p_.pair(x, 0));
  for (int x : gop_->generators()) product_gens_.push_back(p_.pair(0, x));

  const auto triples = goursat_full_subgroups(g_, gop_, true);
  triples_ = triples.size();
  for (const auto& t : triples) {
    const Subgroup l = realize(t, p_);
    if (!where_.count(l.elements())) build_class(l);
  }
  for (std::size_t c = 0; c < classes_.size(); ++c) classify_orbits(c);
}

Subgroup BimoduleClassification::conjugate_in_product(const Subgroup& l, int p) const {
  const auto& pg = p_.group;
  std::vector<int> els;
  els.reserve(l.elements().size());
  for (int x : l.elements()) els.push_back(pg->conj(p, x));
  std::sort(els.begin(), els.end());
  return Subgroup(pg, std::move(els));
}

void BimoduleClassification::build_class(const Subgroup& start) {
  const auto& pg = p_.group;
  SubgroupClass cls{start, {start}, {0}, nullptr, {}, {}};
  std::map<std::vector<int>, std::size_t> local{{start.elements(), 0}};
  for (std::size_t k = 0; k < cls.members.size(); ++k) {
    for (int s : product_gens_) {
      Subgroup m = conjugate_in_product(cls.members[k], s);
      if (local.count(m.elements())) continue;
      local.emplace(m.elements(), cls.members.size());
      cls.to_rep.push_back(pg->mul(cls.to_rep[k], pg->inv(s)));
      cls.members.push_back(std::move(m));
    }
  }
  const std::size_t r = static_cast<std::size_t>(
      std::min_element(cls.members.begin(), cls.members.end()) - cls.members.begin());
  const int tr_inv = pg->inv(cls.to_rep[r]);
  for (auto& t : cls.to_rep) t = pg->mul(tr_inv, t);
  cls.rep = cls.members[r];

  const std::size_t id = classes_.size();
  for (std::size_t k = 0; k < cls.members.size(); ++k) where_[cls.members[k].elements()] = {id, k};

  cls.schur = std::make_shared<const SchurMultiplier>(cls.rep.as_group("L"), cls.rep.order());

  // Normalizer generators modulo L itself, which acts trivially on H^2(L).
  const auto lgens = subgroup_gens(cls.rep);
  std::vector<int> covering = lgens;
  std::vector<char> covered(static_cast<std::size_t>(pg->order()), 0);
  for (int x : cls.rep.elements()) covered[x] = 1;
  for (int p = 0; p < pg->order(); ++p) {
    if (covered[p]) continue;
    bool normalizes = true;
    for (int x : lgens)
      if (!cls.rep.contains(pg->conj(p, x))) {
        normalizes = false;
        break;
      }
    if (!normalizes) continue;
    cls.normalizer_gens.push_back(p);
    covering.push_back(p);
    for (int y : pg->closure(covering)) covered[y] = 1;
  }
  classes_.push_back(std::move(cls));
}

Cochain2 BimoduleClassification::transport(const Subgroup& from, const Cochain2& mu, const Subgroup& to,
                                           const GroupPtr& to_group, int p) const {
  const auto& pg = p_.group;
  const int pinv = pg->inv(p);
  const int n = to.order();
  std::vector<int> back(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    back[i] = from.index_of(pg->conj(pinv, to.elements()[i]));
    if (back[i] < 0) throw InvalidInput("conjugating element does not map the subgroups onto each other");
  }
  Cochain2 out = Cochain2::zero(to_group, mu.moduli);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = mu(back[i], back[j]);
  return out;
}

BimoduleDatum BimoduleClassification::make_datum(const Subgroup& l, Cochain2 mu) const {
  if (l.parent() != p_.group) throw InvalidInput("subgroup does not live in G x G^op");
  const GroupPtr lg = mu.group;
  if (lg->order() != l.order()) throw InvalidInput("cocycle is not defined on the subgroup");
  std::vector<int> e1, e2, s1, s2;
  for (int i = 0; i < l.order(); ++i) {
    const int x = l.elements()[i];
    if (p_.second(x) == 0) {
      e1.push_back(p_.first(x));
      s1.push_back(i);
    }
    if (p_.first(x) == 0) {
      e2.push_back(p_.second(x));
      s2.push_back(i);
    }
  }
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  Subgroup in1(lg, std::move(s1)), in2(lg, std::move(s2));
  AlternatingBicharacter alt = alt_bicharacter(mu, in1, in2);
  return BimoduleDatum{l, std::move(mu), Subgroup(g_, std::move(e1)), Subgroup(gop_, std::move(e2)), std::move(alt)};
}

void BimoduleClassification::classify_orbits(std::size_t c) {
  SubgroupClass& cls = classes_[c];
  const auto& schur = *cls.schur;
  const auto els = schur.elements();
  std::map<std::vector<i64>, int> index;
  for (std::size_t i = 0; i < els.size(); ++i) index[els[i]] = static_cast<int>(i);

  UnionFind uf(els.size());
  std::vector<char> good(els.size(), 0);
  for (std::size_t i = 0; i < els.size(); ++i) {
    const Cochain2 f = schur.representative(els[i]);
    good[i] = is_nondegenerate(make_datum(cls.rep, f).alt);
    for (int n : cls.normalizer_gens) {
      const auto img = schur.classify(transport(cls.rep, f, cls.rep, schur.group(), n));
      uf.join(static_cast<int>(i), index.at(img));
    }
  }
  std::map<int, std::size_t> root_orbit;
  std::map<int, i64> root_size;
  for (std::size_t i = 0; i < els.size(); ++i) ++root_size[uf.find(static_cast<int>(i))];
  for (std::size_t i = 0; i < els.size(); ++i) {
    const int root = uf.find(static_cast<int>(i));
    if (!good[i]) {
      cls.orbit[els[i]] = -1;
      continue;
    }
    auto it = root_orbit.find(root);
    if (it == root_orbit.end()) {
      // els is lexicographic, so the first class met is the orbit minimum.
      it = root_orbit.emplace(root, orbits_.size()).first;
      orbits_.push_back(BimoduleOrbit{make_datum(cls.rep, schur.representative(els[i])), els[i], c,
                                      static_cast<i64>(cls.members.size()) * root_size[root]});
    }
    cls.orbit[els[i]] = static_cast<int>(it->second);
  }
}

std::pair<std::size_t, std::vector<i64>> BimoduleClassification::locate(const BimoduleDatum& d) const {
  const auto it = where_.find(d.l.elements());
  if (it == where_.end()) throw InvalidInput("subgroup is not a full-projection subgroup with abelian legs");
  const auto& cls = classes_[it->second.first];
  const int t = cls.to_rep[it->second.second];
  const auto f = transport(d.l, d.mu, cls.rep, cls.schur->group(), t);
  return {it->second.first, cls.schur->classify(f)};
}

std::size_t BimoduleClassification::orbit_of(const BimoduleDatum& d) const {
  const auto [c, coords] = locate(d);
  const int o = classes_[c].orbit.at(coords);
  if (o < 0) throw InvalidInput("bimodule datum is not invertible");
  return static_cast<std::size_t>(o);
}

BimoduleDatum BimoduleClassification::identity_datum() const {
  std::vector<int> els;
  for (int x = 0; x < g_->order(); ++x) els.push_back(p_.pair(x, g_->inv(x)));
  std::sort(els.begin(), els.end());
  Subgroup l(p_.group, std::move(els));
  const GroupPtr lg = l.as_group("L");
  return make_datum(l, Cochain2::zero(lg, {static_cast<i64>(l.order())}));
}

BimoduleDatum BimoduleClassification::inverse(const BimoduleDatum& d) const {
  std::vector<int> els;
  for (int x : d.l.elements()) els.push_back(p_.pair(p_.second(x), p_.first(x)));
  std::sort(els.begin(), els.end());
  Subgroup lv(p_.group, std::move(els));
  const GroupPtr lg = lv.as_group("L");
  const int n = lv.order();
  // psi(x1, x2) = (x2^-1, x1^-1) maps L^v onto L homomorphically.
  std::vector<int> psi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int u = lv.elements()[i];
    psi[i] = d.l.index_of(p_.pair(g_->inv(p_.second(u)), g_->inv(p_.first(u))));
    if (psi[i] < 0) throw ConsistencyError("opposite subgroup does not match");
  }
  const i64 m = d.mu.moduli.front();
  Cochain2 mu = Cochain2::zero(lg, d.mu.moduli);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mu.at(i, j) = mod_pos(-d.mu(psi[i], psi[j]), m);
  return make_datum(lv, std::move(mu));
}

bool BimoduleClassification::is_involution(const BimoduleDatum& d, int* witness) const {
  const BimoduleDatum inv = inverse(d);
  if (orbit_of(d) != orbit_of(inv)) return false;
  if (witness) {
    const auto target = locate(inv);
    const auto& pg = p_.group;
    *witness = -1;
    for (int p = 0; p < pg->order() && *witness < 0; ++p) {
      bool maps = true;
      for (int x : d.l.elements())
        if (!inv.l.contains(pg->conj(p, x))) {
          maps = false;
          break;
        }
      if (!maps) continue;
      const auto moved = make_datum(inv.l, transport(d.l, d.mu, inv.l, inv.mu.group, p));
      if (locate(moved) == target) *witness = p;
    }
    if (*witness < 0) throw ConsistencyError("involution without a conjugating witness");
  }
  return true;
}

namespace {

// (Alt of mu on the leg) / |leg| in Z/|G|, the leg embedded through `embed`.
template <class Embed>
AlternatingBicharacter leg_form(const BimoduleDatum& d, const Subgroup& leg, i64 group_order, Embed embed) {
  const int k = leg.order();
  const i64 m = d.mu.moduli.front();
  std::vector<i64> values(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int ia = d.l.index_of(embed(leg.elements()[a]));
      const int ib = d.l.index_of(embed(leg.elements()[b]));
      const i64 v = mod_pos(d.mu(ia, ib) - d.mu(ib, ia), m);
      if (v % k != 0) throw ConsistencyError("restricted form does not take values in the leg exponent");
      values[static_cast<std::size_t>(a) * k + b] = mod_pos(v / k, group_order);
    }
  return make_form(leg, group_order, std::move(values));
}

bool invariant(const AlternatingBicharacter& b) {
  const auto& g = b.left.parent();
  for (int s : g->generators())
    for (int x : b.left.elements())
      for (int y : b.left.elements())
        if (b(g->conj(s, x), g->conj(s, y)) != b(x, y)) return false;
  return true;
}

}  // namespace

Lagrangian BimoduleClassification::canonical_image(const BimoduleDatum& d) const {
  if (!d.l1.is_normal() || !d.l1.is_abelian()) throw ConsistencyError("left leg is not normal abelian");
  auto b = leg_form(d, d.l1, g_->order(), [this](int x) { return p_.pair(x, 0); });
  if (!invariant(b)) throw ConsistencyError("restricted form is not G-invariant");
  return Lagrangian{d.l1, std::move(b)};
}

bool BimoduleClassification::verify(const BimoduleDatum& d) const {
  std::vector<char> left(static_cast<std::size_t>(g_->order()), 0), right = left;
  for (int x : d.l.elements()) {
    left[p_.first(x)] = 1;
    right[p_.second(x)] = 1;
  }
  const auto all = [](const std::vector<char>& v) { return std::all_of(v.begin(), v.end(), [](char c) { return c; }); };
  if (!all(left) || !all(right)) return false;
  if (!d.l1.is_abelian() || !d.l2.is_abelian()) return false;
  if (!d.l1.is_normal() || !d.l2.is_normal()) return false;
  if (static_cast<i64>(d.l.order()) != static_cast<i64>(d.l1.order()) * g_->order()) return false;
  if (d.l1.order() != d.l2.order()) return false;
  if (!is_bilinear(d.alt) || !is_nondegenerate(d.alt)) return false;
  const GModule trivial = GModule::trivial(d.mu.group, d.mu.moduli.front());
  if (!satisfies_generator_identity(trivial, d.mu, small_generating_set(d.mu.group))) return false;
  try {
    canonical_image(d);
    if (!invariant(leg_form(d, d.l2, g_->order(), [this](int x) { return p_.pair(0, x); }))) return false;
  } catch (const ConsistencyError&) {
    return false;
  }
  return true;
}

}  // namespace brpic
