#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace brpic {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as a dense multiplication table.
///
/// Elements are the integers 0..order-1 and 0 is the identity. Instances are
/// immutable; every higher structure refers to a group through a GroupPtr.
class FiniteGroup {
 public:
  /// Validates the table: two-sided identity at 0, Latin-square rows and
  /// columns, and (when `check_associativity`) a full associativity scan.
  FiniteGroup(int order, std::vector<int> table, std::string name, bool check_associativity = true);

  int order() const noexcept { return n_; }
  int mul(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  int conj(int g, int x) const noexcept { return mul(mul(g, x), inverse_[g]); }
  int power(int a, long k) const;
  int element_order(int a) const noexcept { return orders_[a]; }
  bool is_abelian() const noexcept { return abelian_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<int>& table() const noexcept { return table_; }
  /// A generating set found greedily (elements of large order first).
  const std::vector<int>& generators() const noexcept { return generators_; }

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<int> closure(std::span<const int> gens) const;

 private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<int> generators_;
  std::string name_;
  bool abelian_ = true;
};

GroupPtr make_group(int order, std::vector<int> table, std::string name, bool check_associativity = true);

/// A subgroup of a parent group, as a sorted set of parent indices.
class Subgroup {
 public:
  /// Throws InvalidInput unless `elements` is closed under product and inverse.
  Subgroup(GroupPtr parent, std::vector<int> elements);
  static Subgroup generated(GroupPtr parent, std::span<const int> gens);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<int>& elements() const noexcept { return elements_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(int g) const noexcept { return member_[g] != 0; }
  bool is_normal() const noexcept { return normal_; }
  bool is_abelian() const noexcept { return abelian_; }
  /// Position of a parent element inside elements(), or -1.
  int index_of(int g) const noexcept { return position_[g]; }
  /// The subgroup as a group in its own right; element i is elements()[i].
  GroupPtr as_group(const std::string& name = "") const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  /// Canonical order: by order, then lexicographically by element set.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<char> member_;
  std::vector<int> position_;
  bool normal_ = false;
  bool abelian_ = false;
};

/// A map between groups given by its table of images.
struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images;

  int operator()(int g) const noexcept { return images[g]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
  /// Inverse of a bijective map. Throws InvalidInput otherwise.
  GroupMap inverse() const;
  static GroupMap identity(const GroupPtr& g);
};

/// outer o inner
GroupMap compose(const GroupMap& outer, const GroupMap& inner);
/// Conjugation x -> g x g^-1 as an automorphism.
GroupMap inner_automorphism(const GroupPtr& group, int g);

/// G with reversed multiplication on the same element set.
GroupPtr opposite(const GroupPtr& group);

struct Product {
  GroupPtr group;
  GroupMap left;   // g -> (g, 1)
  GroupMap right;  // h -> (1, h)
  int pair(int g, int h) const noexcept { return g * right.source->order() + h; }
  int first(int x) const noexcept { return x / right.source->order(); }
  int second(int x) const noexcept { return x % right.source->order(); }
};

/// Componentwise product; (g, h) has index g*|H| + h. Honors caps().product_order.
Product direct_product(const GroupPtr& g, const GroupPtr& h);

/// Every subgroup, sorted canonically. Honors caps().analysis_order.
std::vector<Subgroup> all_subgroups(const GroupPtr& group);
std::vector<Subgroup> normal_subgroups(const GroupPtr& group);
/// Normal abelian subgroups, including the trivial one, sorted canonically.
std::vector<Subgroup> normal_abelian_subgroups(const GroupPtr& group);

Subgroup center(const GroupPtr& group);
Subgroup derived_subgroup(const GroupPtr& group);
Subgroup centralizer(const GroupPtr& group, std::span<const int> elements);
/// Largest normal subgroup contained in h.
Subgroup core(const Subgroup& h);
/// g H g^-1
Subgroup conjugate(const Subgroup& h, int g);
Subgroup image(const GroupMap& map, const Subgroup& h);

struct Quotient {
  GroupPtr group;
  GroupMap projection;
  std::vector<int> representatives;  // smallest element of each coset
};

/// G/N with cosets numbered by their smallest element. Throws unless N is normal.
Quotient quotient(const Subgroup& normal);

/// A small generating set; tries hard to find two generators for groups
/// that admit them. Used wherever cost grows with the number of generators.
std::vector<int> small_generating_set(const GroupPtr& group);

struct Automorphisms {
  std::vector<GroupMap> all;         // sorted by image table
  std::vector<GroupMap> inner;       // distinct conjugation maps
  std::vector<GroupMap> outer;       // one representative per coset of Inn
  std::vector<int> outer_class;      // outer_class[i]: coset index of all[i]
  std::size_t identity_index = 0;    // position of the identity in `all`
};

/// All automorphisms by backtracking on generator images. Honors caps().analysis_order.
Automorphisms automorphism_group(const GroupPtr& group);

/// Every isomorphism source -> target (all of them when limit == 0).
std::vector<GroupMap> isomorphisms(const GroupPtr& source, const GroupPtr& target, std::size_t limit = 0);
/// A witness isomorphism, or nullopt when the groups are not isomorphic.
std::optional<GroupMap> is_isomorphic(const GroupPtr& a, const GroupPtr& b);

/// Sorted multiset of element orders.
std::vector<int> order_profile(const GroupPtr& group);
/// Number of x with x^2 = 1.
int involution_count(const GroupPtr& group);

}  // namespace brpic
