#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "brpic/bimodule.hpp"
#include "brpic/cohomology.hpp"
#include "brpic/lagrangian.hpp"

namespace brpic {

/// The stabilizer of Rep(G): pairs (outer class, Schur class) with
/// (a, z)(a', z') = (a a', z' + z^(a'^-1)), acting on Lagrangians by
/// (N, b) -> (a(N), b^a + Alt(z^a) on a(N)).
class A0Group {
 public:
  A0Group(GroupPtr g, const Automorphisms& aut, std::shared_ptr<const SchurMultiplier> schur);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t out_class(std::size_t i) const noexcept { return elements_[i].first; }
  const std::vector<i64>& zeta(std::size_t i) const noexcept { return elements_[i].second; }
  std::size_t mul(std::size_t i, std::size_t j) const noexcept { return table_[i * size() + j]; }
  std::size_t index(std::size_t out, const std::vector<i64>& zeta) const;
  /// The multiplication table as a group (identity at 0); associativity is checked.
  const GroupPtr& as_group() const noexcept { return group_; }
  const GroupMap& automorphism(std::size_t i) const { return aut_->outer[elements_[i].first]; }

  Lagrangian act(std::size_t i, const Lagrangian& l) const;

 private:
  GroupPtr g_;
  const Automorphisms* aut_;
  std::shared_ptr<const SchurMultiplier> schur_;
  std::vector<Cochain2> zeta_cochains_;  // one per Schur class, in elements() order
  std::vector<std::pair<std::size_t, std::vector<i64>>> elements_;
  std::vector<std::size_t> table_;
  GroupPtr group_;
};

struct PermutationRep {
  std::vector<Lagrangian> domain;
  std::vector<std::vector<int>> perms;  // perms[i] for A0 element i
  std::vector<std::size_t> kernel;      // A0 elements fixing every point
  std::vector<std::vector<int>> image;  // distinct permutations, sorted
};

/// Groups checked against the computed constraints.
struct CatalogEntry {
  std::string name;
  GroupPtr group;
};
/// Representatives up to isomorphism of the catalog groups of a given order.
std::vector<CatalogEntry> catalog(int order);

struct Identification {
  std::vector<std::string> survivors;
  std::vector<std::string> constraints;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

/// Lagrangian with its dual-group label.
struct LabeledLagrangian {
  Lagrangian lagrangian;
  LagrangianLabel label;
  std::optional<bool> in_l0;
};

/// Every stage of the computation for one group; stages run on first use.
class Analysis {
 public:
  explicit Analysis(GroupPtr g);

  const GroupPtr& group() const noexcept { return g_; }
  const SchurMultiplier& schur();
  std::shared_ptr<const SchurMultiplier> schur_ptr();
  const Automorphisms& automorphisms();
  /// Out(G) as a group (outer classes in automorphisms().outer order).
  const GroupPtr& out_group();
  std::string out_name();
  const std::vector<LabeledLagrangian>& lagrangians();
  /// Throws CapExceeded above caps().bimodule_order.
  const BimoduleClassification& bimodules();
  bool bimodules_available() const noexcept;
  /// Canonical images of the bimodule orbits, sorted; checked against the labels.
  const std::vector<Lagrangian>& l0();
  const A0Group& a0();
  const PermutationRep& permutation();
  /// |Schur| |Out| |L0|, compared with the orbit count (ConsistencyError on mismatch).
  i64 brpic_order();
  /// Orbits equal to the orbit of their inverse, the identity included.
  int involutions();
  const Identification& identification();
  /// Position of l in lagrangians(), or -1.
  int lagrangian_index(const Lagrangian& l);

 private:
  GroupPtr g_;
  std::shared_ptr<const SchurMultiplier> schur_;
  std::optional<Automorphisms> aut_;
  GroupPtr out_;
  std::optional<std::vector<LabeledLagrangian>> lags_;
  std::unique_ptr<BimoduleClassification> bim_;
  std::optional<std::vector<Lagrangian>> l0_;
  std::unique_ptr<A0Group> a0_;
  std::optional<PermutationRep> perm_;
  std::optional<i64> order_;
  std::optional<int> involutions_;
  std::optional<Identification> ident_;
};

/// Automorphisms of A + dual(A) preserving q(a, chi) = chi(a), by brute force.
/// Throws CapExceeded when |A| > 8.
i64 orthogonal_oracle(const GroupPtr& a);

/// Name of a group from the catalog, or a generic description.
std::string describe_group(const GroupPtr& g);

/// Property suites on one group.
std::vector<Check> run_checks(Analysis& an);

}  // namespace brpic
