#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "brpic/cohomology.hpp"
#include "brpic/goursat.hpp"
#include "brpic/lagrangian.hpp"

namespace brpic {

/// M(L, mu) over G x G^op; mu is a normalized cocycle on L.as_group() with
/// values in Z/|L|.
struct BimoduleDatum {
  Subgroup l;
  Cochain2 mu;
  Subgroup l1;  // L meet (G x 1), as a subgroup of G
  Subgroup l2;  // L meet (1 x G^op), as a subgroup of G^op
  AlternatingBicharacter alt;  // on L1 x L2, both viewed inside L.as_group()
};

struct BimoduleOrbit {
  BimoduleDatum representative;
  std::vector<i64> coordinates;  // Schur coordinates of the representative class
  std::size_t subgroup_class = 0;
  i64 size = 0;  // conjugates of L times classes in the normalizer orbit
};

/// Invertible bimodule categories over Vec_G up to equivalence.
///
/// Subgroups L come from Goursat triples with abelian legs and are grouped
/// into conjugacy classes under G x G^op. For the least member of each class
/// the normalizer acts on H^2(L, k^x); orbits of nondegenerate classes are the
/// elements of BrPic(Vec_G).
class BimoduleClassification {
 public:
  /// Throws CapExceeded above caps().bimodule_order.
  explicit BimoduleClassification(GroupPtr g);

  const GroupPtr& group() const noexcept { return g_; }
  const GroupPtr& opposite_group() const noexcept { return gop_; }
  const Product& product() const noexcept { return p_; }
  const std::vector<BimoduleOrbit>& orbits() const noexcept { return orbits_; }
  std::size_t triple_count() const noexcept { return triples_; }
  std::size_t subgroup_class_count() const noexcept { return classes_.size(); }

  /// L = {(g, g^-1)} with trivial mu.
  BimoduleDatum identity_datum() const;
  /// (L^v, -mu^v).
  BimoduleDatum inverse(const BimoduleDatum& d) const;
  /// Orbit index of an invertible datum. Throws InvalidInput otherwise.
  std::size_t orbit_of(const BimoduleDatum& d) const;
  /// Orbit of d equals orbit of its inverse; the witness is a conjugating
  /// element of G x G^op taking L onto L^v's orbit representative side.
  bool is_involution(const BimoduleDatum& d, int* witness = nullptr) const;
  /// (L1, Alt(mu restricted to L1)) rescaled to values in Z/|G|.
  Lagrangian canonical_image(const BimoduleDatum& d) const;
  /// Conditions (i)-(iii), normality of the legs and invariance of the
  /// restricted forms, by direct scan.
  bool verify(const BimoduleDatum& d) const;

  /// Datum from a subgroup of the product and a cocycle on it.
  BimoduleDatum make_datum(const Subgroup& l, Cochain2 mu) const;

 private:
  struct SubgroupClass {
    Subgroup rep;
    std::vector<Subgroup> members;
    std::vector<int> to_rep;  // to_rep[k] * members[k] * to_rep[k]^-1 = rep
    std::shared_ptr<const SchurMultiplier> schur;
    std::vector<int> normalizer_gens;
    std::map<std::vector<i64>, int> orbit;  // Schur class -> orbit index, -1 if degenerate
  };
  void build_class(const Subgroup& start);
  void classify_orbits(std::size_t c);
  Subgroup conjugate_in_product(const Subgroup& l, int p) const;
  /// mu^p on to = p L p^-1, as a cochain on to_group (a copy of to.as_group()).
  Cochain2 transport(const Subgroup& from, const Cochain2& mu, const Subgroup& to, const GroupPtr& to_group,
                     int p) const;
  std::pair<std::size_t, std::vector<i64>> locate(const BimoduleDatum& d) const;

  GroupPtr g_, gop_;
  Product p_;
  std::vector<int> product_gens_;
  std::size_t triples_ = 0;
  std::vector<SubgroupClass> classes_;
  std::map<std::vector<int>, std::pair<std::size_t, std::size_t>> where_;  // elements -> (class, member)
  std::vector<BimoduleOrbit> orbits_;
};

}  // namespace brpic
