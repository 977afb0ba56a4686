#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brpic/cohomology.hpp"

namespace brpic {

/// L(N, b): a normal abelian subgroup with a G-invariant alternating form,
/// values in Z/|G|.
struct Lagrangian {
  Subgroup n;
  AlternatingBicharacter b;

  friend bool operator==(const Lagrangian& x, const Lagrangian& y) { return x.n == y.n && x.b.values == y.b.values; }
  /// By N (order, then elements), then by the value table; the zero form comes first.
  friend bool operator<(const Lagrangian& x, const Lagrangian& y);
  std::string describe() const;
};

/// Alternating bicharacter on N with values in Z/modulus from its table.
AlternatingBicharacter make_form(const Subgroup& n, i64 modulus, std::vector<i64> values);

/// All alternating bicharacters on abelian N (values in Z/modulus), zero first.
std::vector<AlternatingBicharacter> alternating_forms(const Subgroup& n, i64 modulus);
/// G-invariant ones with modulus |G|.
std::vector<AlternatingBicharacter> invariant_classes(const Subgroup& n);

std::vector<Lagrangian> enumerate_lagrangians(const GroupPtr& g);
Lagrangian canonical_lagrangian(const GroupPtr& g);

enum class LabelStatus { CanonicalRepG, Semidirect, CandidateSet, Unlabeled };

struct LagrangianLabel {
  LabelStatus status = LabelStatus::Unlabeled;
  /// The witness (semidirect), or the deduplicated candidates.
  std::vector<GroupPtr> groups;
};

/// The group G_(N, b) where it is determined: N = 1, or b = 0 (the semidirect
/// product of the dual of N by G/N). Otherwise every extension of G/N by the
/// dual over H^2(G/N, dual), up to isomorphism.
LagrangianLabel label(const Lagrangian& l);
/// Definite only for canonical, semidirect and single-candidate labels.
std::optional<bool> in_l0_by_label(const Lagrangian& l, const LagrangianLabel& lab);

/// The dual of N with the G/N action (q.chi)(n) = chi(s(q)^-1 n s(q)).
GModule dual_module(const Subgroup& n, const Quotient& q);

}  // namespace brpic
