#include "brpic/brpic.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "brpic/config.hpp"
#include "brpic/error.hpp"

namespace brpic {

namespace {

std::size_t automorphism_index(const Automorphisms& aut, const std::vector<int>& images) {
  const auto it = std::lower_bound(aut.all.begin(), aut.all.end(), images,
                                   [](const GroupMap& m, const std::vector<int>& v) { return m.images < v; });
  if (it == aut.all.end() || it->images != images) throw ConsistencyError("composite is not an automorphism");
  return static_cast<std::size_t>(it - aut.all.begin());
}

std::size_t outer_product(const Automorphisms& aut, std::size_t a, std::size_t b) {
  return static_cast<std::size_t>(
      aut.outer_class[automorphism_index(aut, compose(aut.outer[a], aut.outer[b]).images)]);
}

}  // namespace

A0Group::A0Group(GroupPtr g, const Automorphisms& aut, std::shared_ptr<const SchurMultiplier> schur)
    : g_(std::move(g)), aut_(&aut), schur_(std::move(schur)) {
  const auto classes = schur_->elements();
  for (const auto& z : classes) zeta_cochains_.push_back(schur_->representative(z));
  for (std::size_t o = 0; o < aut.outer.size(); ++o)
    for (const auto& z : classes) elements_.emplace_back(o, z);

  // z^(a'^-1) for every outer class a' and Schur class z.
  std::vector<std::vector<std::vector<i64>>> twisted(aut.outer.size());
  for (std::size_t o = 0; o < aut.outer.size(); ++o) {
    const GroupMap ainv = aut.outer[o].inverse();
    for (const auto& f : zeta_cochains_) twisted[o].push_back(schur_->classify(pullback(f, ainv)));
  }
  const auto& factors = schur_->factors();
  const std::size_t n = size();
  std::map<std::vector<i64>, std::size_t> zindex;
  for (std::size_t k = 0; k < classes.size(); ++k) zindex[classes[k]] = k;
  table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [o1, z1] = elements_[i];
      const auto& [o2, z2] = elements_[j];
      const auto& tw = twisted[o2][zindex.at(z1)];
      std::vector<i64> z(factors.size());
      for (std::size_t c = 0; c < z.size(); ++c) z[c] = mod_pos(z2[c] + tw[c], factors[c]);
      table_[i * n + j] = outer_product(aut, o1, o2) * classes.size() + zindex.at(z);
    }
  std::vector<int> t(table_.begin(), table_.end());
  group_ = make_group(static_cast<int>(n), std::move(t), "A0", true);
}

std::size_t A0Group::index(std::size_t out, const std::vector<i64>& zeta) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].first == out && elements_[i].second == zeta) return i;
  throw InvalidInput("no such element of A0");
}

Lagrangian A0Group::act(std::size_t i, const Lagrangian& l) const {
  const GroupMap& a = automorphism(i);
  const GroupMap ainv = a.inverse();
  const Cochain2& z = zeta_cochains_[i % zeta_cochains_.size()];
  const i64 m = g_->order();
  Subgroup n = image(a, l.n);
  const int k = n.order();
  std::vector<i64> values(static_cast<std::size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      const int u = ainv(n.elements()[x]);
      const int v = ainv(n.elements()[y]);
      values[static_cast<std::size_t>(x) * k + y] = mod_pos(l.b(u, v) + z(u, v) - z(v, u), m);
    }
  AlternatingBicharacter b = make_form(n, m, std::move(values));
  return Lagrangian{std::move(n), std::move(b)};
}

Analysis::Analysis(GroupPtr g) : g_(std::move(g)) {
  if (g_->order() > caps().analysis_order)
    throw CapExceeded("analysis is limited to order " + std::to_string(caps().analysis_order));
}

std::shared_ptr<const SchurMultiplier> Analysis::schur_ptr() {
  if (!schur_) schur_ = std::make_shared<const SchurMultiplier>(g_);
  return schur_;
}

const SchurMultiplier& Analysis::schur() { return *schur_ptr(); }

const Automorphisms& Analysis::automorphisms() {
  if (!aut_) aut_ = automorphism_group(g_);
  return *aut_;
}

const GroupPtr& Analysis::out_group() {
  if (!out_) {
    const auto& aut = automorphisms();
    const int k = static_cast<int>(aut.outer.size());
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = static_cast<int>(outer_product(aut, i, j));
    out_ = make_group(k, std::move(table), "Out", true);
  }
  return out_;
}

std::string Analysis::out_name() { return describe_group(out_group()); }

const std::vector<LabeledLagrangian>& Analysis::lagrangians() {
  if (!lags_) {
    lags_.emplace();
    for (auto& l : enumerate_lagrangians(g_)) {
      LagrangianLabel lab = label(l);
      auto in = in_l0_by_label(l, lab);
      lags_->push_back(LabeledLagrangian{std::move(l), std::move(lab), in});
    }
  }
  return *lags_;
}

int Analysis::lagrangian_index(const Lagrangian& l) {
  const auto& ls = lagrangians();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i].lagrangian == l) return static_cast<int>(i);
  return -1;
}

bool Analysis::bimodules_available() const noexcept { return g_->order() <= caps().bimodule_order; }

const BimoduleClassification& Analysis::bimodules() {
  if (!bim_) bim_ = std::make_unique<BimoduleClassification>(g_);
  return *bim_;
}

const std::vector<Lagrangian>& Analysis::l0() {
  if (l0_) return *l0_;
  const auto& ls = lagrangians();
  std::vector<Lagrangian> out;
  if (bimodules_available()) {
    std::set<Lagrangian> images;
    for (const auto& o : bimodules().orbits()) images.insert(bimodules().canonical_image(o.representative));
    out.assign(images.begin(), images.end());
    for (const auto& l : ls) {
      const bool member = images.count(l.lagrangian) > 0;
      if (l.in_l0 && *l.in_l0 != member)
        throw ConsistencyError("dual-group label disagrees with the bimodule images for " + l.lagrangian.describe());
    }
    for (const auto& l : out)
      if (lagrangian_index(l) < 0) throw ConsistencyError("canonical image is not among the enumerated Lagrangians");
  } else {
    for (const auto& l : ls) {
      if (!l.in_l0) throw CapExceeded("L0 needs the bimodule enumeration for this group; raise BRPIC_MAX_ORDER");
      if (*l.in_l0) out.push_back(l.lagrangian);
    }
  }
  l0_ = std::move(out);
  return *l0_;
}

const A0Group& Analysis::a0() {
  if (!a0_) a0_ = std::make_unique<A0Group>(g_, automorphisms(), schur_ptr());
  return *a0_;
}

const PermutationRep& Analysis::permutation() {
  if (perm_) return *perm_;
  PermutationRep rep;
  rep.domain = l0();
  const auto& a = a0();
  std::map<Lagrangian, int> pos;
  for (std::size_t i = 0; i < rep.domain.size(); ++i) pos[rep.domain[i]] = static_cast<int>(i);
  std::set<std::vector<int>> image;
  for (std::size_t e = 0; e < a.size(); ++e) {
    std::vector<int> p;
    for (const auto& l : rep.domain) {
      const auto it = pos.find(a.act(e, l));
      if (it == pos.end()) throw ConsistencyError("A0 moves a point of L0 outside L0");
      p.push_back(it->second);
    }
    bool fixes = true;
    for (std::size_t i = 0; i < p.size(); ++i) fixes = fixes && p[i] == static_cast<int>(i);
    if (fixes) rep.kernel.push_back(e);
    image.insert(p);
    rep.perms.push_back(std::move(p));
  }
  rep.image.assign(image.begin(), image.end());
  perm_ = std::move(rep);
  return *perm_;
}

i64 Analysis::brpic_order() {
  if (order_) return *order_;
  const i64 formula = schur().order() * static_cast<i64>(automorphisms().outer.size()) * static_cast<i64>(l0().size());
  if (bimodules_available()) {
    const auto orbits = static_cast<i64>(bimodules().orbits().size());
    if (orbits != formula)
      throw ConsistencyError("bimodule orbit count " + std::to_string(orbits) + " differs from the order formula " +
                             std::to_string(formula));
  }
  order_ = formula;
  return formula;
}

int Analysis::involutions() {
  if (!involutions_) {
    int n = 0;
    for (const auto& o : bimodules().orbits()) n += bimodules().is_involution(o.representative) ? 1 : 0;
    involutions_ = n;
  }
  return *involutions_;
}

}  // namespace brpic
