#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "brpic/abelian.hpp"
#include "brpic/group.hpp"
#include "brpic/linalg.hpp"

namespace brpic {

/// M = Z/m_1 + ... + Z/m_r with the group acting through integer matrices.
struct GModule {
  GroupPtr group;
  std::vector<i64> moduli;
  std::vector<Matrix> action;  // action[g] is r x r; empty means trivial action

  static GModule trivial(GroupPtr group, i64 m);
  /// Characters of a normal abelian subgroup, with `acting` operating through
  /// conjugation by to_parent(h): (h.chi)(n) = chi(s^-1 n s), s = to_parent(h).
  static GModule dual(const AbelianStructure& a, GroupPtr acting, const std::function<int(int)>& to_parent);

  std::size_t rank() const noexcept { return moduli.size(); }
  bool is_trivial() const noexcept { return action.empty(); }
  i64 coeff(int g, std::size_t i, std::size_t j) const noexcept {
    return action.empty() ? (i == j ? 1 : 0) : action[g][i][j];
  }
  /// out = g . v
  void apply(int g, const i64* v, i64* out) const noexcept;
  /// Checks identity and g.(h.v) = (gh).v on the matrices. Throws InvalidInput.
  void validate() const;
  i64 order() const noexcept;
};

/// Normalized 1-cochain; values[g * r + i].
struct Cochain1 {
  GroupPtr group;
  std::vector<i64> moduli;
  std::vector<i64> values;

  std::size_t rank() const noexcept { return moduli.size(); }
  i64 operator()(int g, std::size_t i = 0) const noexcept { return values[static_cast<std::size_t>(g) * rank() + i]; }
  static Cochain1 zero(GroupPtr group, std::vector<i64> moduli);
};

/// Normalized 2-cochain; values[(a * n + b) * r + i].
struct Cochain2 {
  GroupPtr group;
  std::vector<i64> moduli;
  std::vector<i64> values;

  std::size_t rank() const noexcept { return moduli.size(); }
  std::size_t index(int a, int b, std::size_t i = 0) const noexcept {
    return (static_cast<std::size_t>(a) * group->order() + b) * rank() + i;
  }
  i64 operator()(int a, int b, std::size_t i = 0) const noexcept { return values[index(a, b, i)]; }
  i64& at(int a, int b, std::size_t i = 0) noexcept { return values[index(a, b, i)]; }
  static Cochain2 zero(GroupPtr group, std::vector<i64> moduli);
};

Cochain2 operator+(const Cochain2& f, const Cochain2& g);
Cochain2 operator-(const Cochain2& f);
Cochain2 scale(const Cochain2& f, i64 k);

/// (d lambda)(g, h) = g.lambda(h) - lambda(gh) + lambda(g)
Cochain2 coboundary(const GModule& m, const Cochain1& lambda);
/// Full scan of the 2-cocycle identity over all triples.
bool is_cocycle(const GModule& m, const Cochain2& f);
/// a.f(g,x) - f(ag,x) + f(a,gx) - f(a,g) = 0 for all a, g and x in `gens`.
bool satisfies_generator_identity(const GModule& m, const Cochain2& f, const std::vector<int>& gens);
/// Crossed-homomorphism identity f(gh) = f(g) + g.f(h), full scan.
bool is_crossed_hom(const GModule& m, const Cochain1& f);

/// BFS spanning tree of the Cayley graph for a generating set; generator j
/// is the depth-one vertex reached from the identity by edge j.
class SpanningTree {
 public:
  SpanningTree() = default;
  SpanningTree(GroupPtr group, std::vector<int> gens);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<int>& gens() const noexcept { return gens_; }
  const std::vector<int>& order() const noexcept { return order_; }
  int parent(int c) const noexcept { return parent_[c]; }
  int via(int c) const noexcept { return via_[c]; }
  /// Index of the non-tree edge (g, gens[j]), or -1 for tree edges.
  int edge(int g, std::size_t j) const noexcept { return edge_[static_cast<std::size_t>(g) * gens_.size() + j]; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Non-tree edge e as (g, j).
  std::pair<int, int> edge_ends(std::size_t e) const noexcept { return edges_[e]; }

 private:
  GroupPtr group_;
  std::vector<int> gens_;
  std::vector<int> order_, parent_, via_, edge_;
  std::vector<std::pair<int, int>> edges_;
};

/// H^1(G, M): crossed homomorphisms modulo principal ones.
class H1 {
 public:
  explicit H1(GModule m);
  const GModule& module() const noexcept { return module_; }
  const std::vector<i64>& factors() const noexcept { return lin_.factors(); }
  i64 order() const noexcept { return lin_.order(); }
  std::vector<i64> classify(const Cochain1& f) const;
  Cochain1 representative(const std::vector<i64>& coords) const;

 private:
  GModule module_;
  SpanningTree tree_;
  LinearSubquotient lin_;
};

/// H^2(G, M) through cocycles normalized to vanish on the edges of a spanning tree.
///
/// The unknowns are the values on the remaining Cayley edges; the cocycle
/// condition reduces to linear equations indexed by (generator, element,
/// generator). Every kernel vector is re-verified against the generator
/// identity for all first arguments, and equations are added until none fails.
class H2 {
 public:
  explicit H2(GModule m);
  const GModule& module() const noexcept { return module_; }
  const SpanningTree& tree() const noexcept { return tree_; }
  const std::vector<i64>& factors() const noexcept { return lin_.factors(); }
  i64 order() const noexcept { return lin_.order(); }

  using Values = std::function<i64(int, int, std::size_t)>;
  /// Coordinates of the class of a normalized cocycle given pointwise.
  std::vector<i64> classify(const Values& f) const;
  std::vector<i64> classify(const Cochain2& f) const;
  Cochain2 representative(const std::vector<i64>& coords) const;
  /// lambda with f - g = d lambda, when the classes agree.
  std::optional<Cochain1> coboundary_witness(const Cochain2& f, const Cochain2& g) const;
  /// Number of rounds of equation refinement that were needed (1 when the
  /// generator equations already sufficed).
  int rounds() const noexcept { return rounds_; }

 private:
  std::vector<i64> gauge(const Values& f, std::vector<i64>* lambda) const;
  Cochain2 expand(const std::vector<i64>& t) const;
  GModule module_;
  SpanningTree tree_;
  LinearSubquotient lin_;
  Matrix boundary_;  // rows: edge components; columns: generator components
  int rounds_ = 0;
};

/// H^2(G, k^x) realized as H^2(G, Z/N) / delta(Hom(G, Z/N)), N a multiple of |G|.
class SchurMultiplier {
 public:
  explicit SchurMultiplier(GroupPtr group, i64 modulus = 0);
  const GroupPtr& group() const noexcept { return group_; }
  i64 modulus() const noexcept { return modulus_; }
  const std::vector<i64>& factors() const noexcept { return quotient_.factors(); }
  i64 order() const noexcept { return quotient_.order(); }
  const H2& h2() const noexcept { return *h2_; }
  /// |Hom(G, Z/N)| = |G^ab| when N is a multiple of the exponent.
  i64 hom_order() const noexcept { return hom_order_; }

  std::vector<i64> classify(const H2::Values& f) const;
  std::vector<i64> classify(const Cochain2& f) const;
  Cochain2 representative(const std::vector<i64>& coords) const;
  /// Every coordinate vector, lexicographically.
  std::vector<std::vector<i64>> elements() const;

 private:
  GroupPtr group_;
  i64 modulus_;
  std::shared_ptr<const H2> h2_;
  AbelianQuotient quotient_;
  i64 hom_order_ = 1;
  std::vector<Cochain2> lifts_;  // representatives of the quotient basis
};

/// Carry cocycle of a homomorphism chi: G -> Z/N (given by its values).
Cochain2 connecting_map(const GroupPtr& g, const std::vector<i64>& chi, i64 n);

/// f restricted to H, as a cochain on h.as_group() (element i = h.elements()[i]).
Cochain2 restrict(const Cochain2& f, const Subgroup& h);
/// f^theta(x, y) = f(theta^-1 x, theta^-1 y), a cochain on theta.target.
Cochain2 pullback(const Cochain2& f, const GroupMap& theta);
/// g^-1 x g substitution on the group itself: f^g(x, y) = f(g^-1 x g, g^-1 y g).
Cochain2 conjugate_cochain(const Cochain2& f, int g);

/// b(x, y) = mu(x, y) - mu(y, x) on commuting subgroups.
struct AlternatingBicharacter {
  Subgroup left;
  Subgroup right;
  i64 modulus = 1;
  std::vector<i64> values;  // values[i * |right| + j] for left[i], right[j]

  i64 operator()(int x, int y) const {
    return values[static_cast<std::size_t>(left.index_of(x)) * right.order() + right.index_of(y)];
  }
  bool is_zero() const;
  friend bool operator==(const AlternatingBicharacter& a, const AlternatingBicharacter& b) {
    return a.left == b.left && a.right == b.right && a.modulus == b.modulus && a.values == b.values;
  }
};

/// Throws InvalidInput if some pair does not commute. l1 and l2 are subgroups
/// of the group of f (not of as_group copies).
AlternatingBicharacter alt_bicharacter(const Cochain2& f, const Subgroup& l1, const Subgroup& l2);
/// Both partial maps are injective.
bool is_nondegenerate(const AlternatingBicharacter& b);
bool is_bilinear(const AlternatingBicharacter& b);

/// Upper-triangular cocycle mu(x, y) = sum_{i<j} x_i y_j b(e_i, e_j) on
/// a.subject.as_group(). Throws InvalidInput unless b is alternating and bilinear.
Cochain2 class_from_bicharacter(const AbelianStructure& a, const AlternatingBicharacter& b);

/// f and g cohomologous in H^2(G, M)? Returns a witness lambda with f - g = d lambda.
std::optional<Cochain1> is_cohomologous(const H2& h, const Cochain2& f, const Cochain2& g);

/// Extension of the acting group Q by M along a normalized 2-cocycle nu:
/// (v, q)(v', q') = (v + q.v' + nu(q, q'), q q'). With nu = 0 this is M x| Q.
/// Element (v, q) has index vindex(v) * |Q| + q, vindex mixed-radix in the moduli.
GroupPtr extension_group(const GModule& m, const Cochain2* nu, const std::string& name);

/// Orders in the exact sequence for G = N x| T.
struct FiveTermReport {
  i64 h2_g = 0, h2_t = 0, m_tilde = 0, h1_t_dual = 0, image_res = 0, invariant_h2_n = 0, h2_t_dual = 0;
  bool split = false;          // |H2(G)| = |H2(T)| |M~|
  bool exact_left = false;     // |M~| = |H1(T, N^)| |im res|
  bool image_invariant = false;
  bool exact_right = false;    // |H2(N)^T| / |im res| divides |H2(T, N^)|
  bool ok() const noexcept { return split && exact_left && image_invariant && exact_right; }
  std::string summary() const;
};

/// Throws InvalidInput unless n is normal abelian and t is a complement.
FiveTermReport five_term_check(const Subgroup& n, const Subgroup& t);

}  // namespace brpic
