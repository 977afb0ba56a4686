#include "brpic/lagrangian.hpp"

#include <algorithm>
#include <sstream>

#include "brpic/error.hpp"

namespace brpic {

bool operator<(const Lagrangian& x, const Lagrangian& y) {
  if (!(x.n == y.n)) return x.n < y.n;
  return x.b.values < y.b.values;
}

std::string Lagrangian::describe() const {
  std::ostringstream os;
  os << "N=" << n.order() << "{";
  for (std::size_t i = 0; i < n.elements().size(); ++i) os << (i ? "," : "") << n.elements()[i];
  os << "} form=" << (b.is_zero() ? "trivial" : "nontrivial");
  return os.str();
}

AlternatingBicharacter make_form(const Subgroup& n, i64 modulus, std::vector<i64> values) {
  return AlternatingBicharacter{n, n, modulus, std::move(values)};
}

std::vector<AlternatingBicharacter> alternating_forms(const Subgroup& n, i64 modulus) {
  const auto a = abelian_structure(n);
  const std::size_t r = a.rank();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<i64> range;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const i64 g = gcd64(gcd64(a.invariant_factors[i], a.invariant_factors[j]), modulus);
      slots.emplace_back(i, j);
      range.push_back(g);
    }
  std::vector<AlternatingBicharacter> out;
  const int m = n.order();
  for_each_element(range, [&](const std::vector<i64>& c) {
    std::vector<i64> values(static_cast<std::size_t>(m) * m, 0);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        const auto& cx = a.coordinates(n.elements()[x]);
        const auto& cy = a.coordinates(n.elements()[y]);
        i64 v = 0;
        for (std::size_t s = 0; s < slots.size(); ++s) {
          const auto [i, j] = slots[s];
          const i64 bij = c[s] * (modulus / range[s]);
          v = mod_pos(v + (cx[i] * cy[j] - cx[j] * cy[i]) % modulus * bij, modulus);
        }
        values[static_cast<std::size_t>(x) * m + y] = v;
      }
    out.push_back(make_form(n, modulus, std::move(values)));
  });
  return out;
}

std::vector<AlternatingBicharacter> invariant_classes(const Subgroup& n) {
  if (!n.is_normal()) throw InvalidInput("invariant classes need a normal subgroup");
  const auto& g = n.parent();
  std::vector<AlternatingBicharacter> out;
  for (auto& b : alternating_forms(n, g->order())) {
    bool inv = true;
    for (int s : g->generators()) {
      for (int x : n.elements()) {
        for (int y : n.elements())
          if (b(g->conj(s, x), g->conj(s, y)) != b(x, y)) {
            inv = false;
            break;
          }
        if (!inv) break;
      }
      if (!inv) break;
    }
    if (inv) out.push_back(std::move(b));
  }
  return out;
}

std::vector<Lagrangian> enumerate_lagrangians(const GroupPtr& g) {
  std::vector<Lagrangian> out;
  for (const auto& n : normal_abelian_subgroups(g))
    for (auto& b : invariant_classes(n)) out.push_back(Lagrangian{n, std::move(b)});
  std::sort(out.begin(), out.end());
  return out;
}

Lagrangian canonical_lagrangian(const GroupPtr& g) {
  const auto one = Subgroup::trivial(g);
  return Lagrangian{one, make_form(one, g->order(), {0})};
}

GModule dual_module(const Subgroup& n, const Quotient& q) {
  const auto a = abelian_structure(n);
  return GModule::dual(a, q.group, [&q](int i) { return q.representatives[i]; });
}

LagrangianLabel label(const Lagrangian& l) {
  const auto& g = l.n.parent();
  LagrangianLabel out;
  if (l.n.order() == 1) {
    out.status = LabelStatus::CanonicalRepG;
    out.groups.push_back(g);
    return out;
  }
  const Quotient q = quotient(l.n);
  const GModule m = dual_module(l.n, q);
  if (l.b.is_zero()) {
    out.status = LabelStatus::Semidirect;
    out.groups.push_back(extension_group(m, nullptr, "dual(N)x|G/N"));
    return out;
  }
  out.status = LabelStatus::CandidateSet;
  const H2 h(m);
  for_each_element(h.factors(), [&](const std::vector<i64>& c) {
    const Cochain2 nu = h.representative(c);
    auto e = extension_group(m, &nu, "ext");
    for (const auto& seen : out.groups)
      if (is_isomorphic(seen, e)) return;
    out.groups.push_back(std::move(e));
  });
  return out;
}

std::optional<bool> in_l0_by_label(const Lagrangian& l, const LagrangianLabel& lab) {
  const auto& g = l.n.parent();
  switch (lab.status) {
    case LabelStatus::CanonicalRepG: return true;
    case LabelStatus::Semidirect: return is_isomorphic(lab.groups.front(), g).has_value();
    case LabelStatus::CandidateSet:
      if (lab.groups.size() == 1) return is_isomorphic(lab.groups.front(), g).has_value();
      return std::nullopt;
    case LabelStatus::Unlabeled: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace brpic
