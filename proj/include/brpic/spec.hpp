#pragma once

#include <string>
#include <vector>

#include "brpic/group.hpp"

namespace brpic {

/// Parsed group description.
///
///   spec   := factor ('x' factor)*
///   factor := 'S' n | 'A' n | 'D' order | 'Q8' | 'C' n | 'pq(' p ',' q ')'
///           | 'perm:[' gen (';' gen)* ']' | 'table:' path
///   gen    := cycle+ , cycle := '(' point (',' point)* ')'
///
/// `D<k>` takes the group ORDER k, so D8 is the symmetries of a square.
/// `table:` swallows the rest of the string as a path.
struct GroupSpec {
  enum class Kind { Symmetric, Alternating, Dihedral, Quaternion, Cyclic, PQ, Perm, Table, Product };

  Kind kind = Kind::Cyclic;
  int a = 0;
  int b = 0;
  std::vector<std::vector<std::vector<int>>> perm;  // generators, each a list of cycles
  std::string path;
  std::vector<GroupSpec> factors;

  /// Canonical text; parse(canonical()) reproduces this spec.
  std::string canonical() const;
  /// Builds the group. Honors caps().analysis_order.
  GroupPtr build() const;
};

/// Throws ParseError (with the offending position) on malformed text.
GroupSpec parse_spec(const std::string& text);

/// parse_spec(text).build()
GroupPtr build_group(const std::string& text);

}  // namespace brpic
