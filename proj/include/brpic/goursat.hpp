#pragma once

#include <vector>

#include "brpic/group.hpp"

namespace brpic {

/// Subgroup of G x H with full projections: L1 = L meet G, L2 = L meet H and
/// phi: G/L1 -> H/L2 the induced isomorphism.
struct GoursatTriple {
  Subgroup l1;
  Subgroup l2;
  Quotient q1;
  Quotient q2;
  GroupMap phi;  // q1.group -> q2.group
};

/// Every full-projection subgroup of G x H, grouped by (L1, L2) in canonical
/// order and then by phi. With `abelian_legs_only`, L1 and L2 range over
/// normal abelian subgroups.
std::vector<GoursatTriple> goursat_full_subgroups(const GroupPtr& g, const GroupPtr& h, bool abelian_legs_only);

/// L = {(x, y) : phi(x L1) = y L2} as a subgroup of p.group.
Subgroup realize(const GoursatTriple& t, const Product& p);

/// Brute force: subgroups of p.group projecting onto both factors.
std::vector<Subgroup> full_projection_subgroups(const Product& p);

}  // namespace brpic
