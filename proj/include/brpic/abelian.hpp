#pragma once

#include <vector>

#include "brpic/group.hpp"
#include "brpic/linalg.hpp"

namespace brpic {

/// Invariant-factor decomposition of an abelian subgroup.
///
/// Every element has coordinates c with element = prod basis[i]^c[i].
/// Characters of the subject are coordinate vectors chi (chi_i mod d_i) with
/// pairing <a, chi> = sum_i a_i chi_i (e / d_i) mod e, e the exponent.
struct AbelianStructure {
  Subgroup subject;
  std::vector<i64> invariant_factors;  // d_1 | d_2 | ...; empty for the trivial group
  std::vector<int> basis;              // parent indices, basis[i] of order d_i
  i64 exponent = 1;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
  /// Coordinates of a parent element lying in the subject.
  const std::vector<i64>& coordinates(int g) const { return coords_[subject.index_of(g)]; }
  /// Parent element with the given coordinates.
  int element(const std::vector<i64>& c) const;
  /// <a, chi> in Z/exponent.
  i64 pair(int a, const std::vector<i64>& chi) const;

  std::vector<std::vector<i64>> coords_;  // indexed by position in subject
};

/// Throws InvalidInput unless the subgroup is abelian.
AbelianStructure abelian_structure(const Subgroup& a);

/// Matrix M of the contragredient action of g on characters of a normal
/// abelian subgroup: (g.chi)(n) = chi(g^-1 n g), (g.chi)_k = sum_i M[k][i] chi_i mod d_k.
Matrix dual_action(const AbelianStructure& a, int g);

}  // namespace brpic
