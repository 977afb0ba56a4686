#include <doctest.h>

#include "brpic/families.hpp"
#include "brpic/lagrangian.hpp"
#include "brpic/spec.hpp"

using namespace brpic;

namespace {

Lagrangian trivial_form(const Subgroup& n) {
  return Lagrangian{n, make_form(n, n.parent()->order(), std::vector<i64>(static_cast<std::size_t>(n.order()) * n.order(), 0))};
}

Subgroup cyclic_subgroup(const GroupPtr& g, int order, int skip = 0) {
  for (const auto& n : normal_abelian_subgroups(g)) {
    if (n.order() != order) continue;
    bool cyclic = false;
    for (int x : n.elements()) cyclic = cyclic || g->element_order(x) == order;
    if (cyclic && skip-- == 0) return n;
  }
  throw std::runtime_error("no such subgroup");
}

}  // namespace

TEST_CASE("Lagrangian counts") {
  for (const auto& [spec, count] : std::vector<std::pair<const char*, std::size_t>>{
           {"S3", 2}, {"S4", 3}, {"A4", 3}, {"D8", 7}, {"Q8", 5}, {"pq(3,7)", 2}, {"D30", 4}}) {
    const auto ls = enumerate_lagrangians(build_group(spec));
    CHECK_MESSAGE(ls.size() == count, spec);
    CHECK(ls.front() == canonical_lagrangian(build_group(spec)));
  }
}

TEST_CASE("ordering puts the zero form first") {
  const auto ls = enumerate_lagrangians(symmetric_group(4));
  REQUIRE(ls.size() == 3);
  CHECK(ls[1].n == ls[2].n);
  CHECK(ls[1].b.is_zero());
  CHECK_FALSE(ls[2].b.is_zero());
}

TEST_CASE("invariant forms") {
  auto d8 = dihedral_group(8);
  for (const auto& n : normal_abelian_subgroups(d8)) {
    const auto forms = invariant_classes(n);
    const bool klein = n.order() == 4 && cyclic_subgroup(d8, 4).elements() != n.elements();
    CHECK(forms.size() == (klein ? 2u : 1u));
    for (const auto& b : forms) CHECK(is_bilinear(b));
  }
}

TEST_CASE("semidirect labels") {
  auto d18 = dihedral_group(18);
  const auto l = trivial_form(cyclic_subgroup(d18, 9));
  const auto lab = label(l);
  CHECK(lab.status == LabelStatus::Semidirect);
  CHECK(is_isomorphic(lab.groups.front(), d18));
  CHECK(in_l0_by_label(l, lab) == true);

  auto q8 = quaternion_group();
  const auto li = trivial_form(cyclic_subgroup(q8, 4));
  const auto labi = label(li);
  CHECK_FALSE(is_isomorphic(labi.groups.front(), q8));
  CHECK(in_l0_by_label(li, labi) == false);

  auto d8 = dihedral_group(8);
  const auto lz = trivial_form(center(d8));
  const auto labz = label(lz);
  CHECK(is_isomorphic(labz.groups.front(), abelian_group({2, 2, 2})));
  CHECK(in_l0_by_label(lz, labz) == false);
}

TEST_CASE("labels of the trivial Lagrangian and of undetermined candidates") {
  auto s3 = symmetric_group(3);
  const auto base = canonical_lagrangian(s3);
  const auto lab = label(base);
  CHECK(lab.status == LabelStatus::CanonicalRepG);
  CHECK(in_l0_by_label(base, lab) == true);

  LagrangianLabel two{LabelStatus::CandidateSet, {s3, cyclic_group(6)}};
  CHECK_FALSE(in_l0_by_label(base, two).has_value());
  LagrangianLabel none{LabelStatus::Unlabeled, {}};
  CHECK_FALSE(in_l0_by_label(base, none).has_value());
}

TEST_CASE("nontrivial form on V in S4") {
  const auto ls = enumerate_lagrangians(symmetric_group(4));
  const auto lab = label(ls[2]);
  CHECK(lab.status == LabelStatus::CandidateSet);
  REQUIRE(lab.groups.size() == 1);
  CHECK(in_l0_by_label(ls[2], lab) == true);
}
