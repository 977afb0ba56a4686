#pragma once

#include <string>
#include <vector>

#include "brpic/group.hpp"

namespace brpic {

// Concrete group families. Elements are numbered breadth-first over words in
// the listed generators, identity first. `max_order` bounds the search; 0
// means caps().analysis_order.

GroupPtr symmetric_group(int n, int max_order = 0);
GroupPtr alternating_group(int n, int max_order = 0);
/// Dihedral group of ORDER `order` (so D8 has eight elements). Generators r, s.
GroupPtr dihedral_group(int order, int max_order = 0);
/// Dicyclic group of order 4m; dicyclic_group(2) is Q8.
GroupPtr dicyclic_group(int m, int max_order = 0);
GroupPtr quaternion_group();
GroupPtr cyclic_group(int n, int max_order = 0);
/// Nonabelian group of order pq, x^q = y^p = 1, y x y^-1 = x^a. Requires q = 1 mod p.
GroupPtr pq_group(int p, int q, int max_order = 0);
/// Abelian group with the given cyclic factors.
GroupPtr abelian_group(const std::vector<int>& factors, int max_order = 0);
/// Permutation group on points 1..degree generated by `gens`, each a list of cycles.
GroupPtr permutation_group(const std::vector<std::vector<std::vector<int>>>& gens, int max_order = 0);
/// Group read from a JSON file with fields `order` and row-major `table`.
GroupPtr table_group(const std::string& path);

}  // namespace brpic
