#include <doctest.h>

#include "brpic/brpic.hpp"
#include "brpic/error.hpp"
#include "brpic/families.hpp"
#include "brpic/spec.hpp"

using namespace brpic;

namespace {

bool names(Analysis& an, std::vector<std::string> want) { return an.identification().survivors == want; }

}  // namespace

TEST_CASE("A0") {
  struct Row {
    const char* spec;
    GroupPtr want;
  };
  for (const auto& [spec, want] : std::vector<Row>{{"D8", abelian_group({2, 2})},
                                                   {"Q8", symmetric_group(3)},
                                                   {"S4", cyclic_group(2)},
                                                   {"A4", abelian_group({2, 2})}}) {
    Analysis an(build_group(spec));
    CHECK_MESSAGE(is_isomorphic(an.a0().as_group(), want), spec);
  }
}

TEST_CASE("action on Lagrangians") {
  SUBCASE("S4: the Schur class swaps the V-supported Lagrangians") {
    Analysis an(symmetric_group(4));
    const auto& ls = an.lagrangians();
    const std::size_t e = an.a0().index(0, {1});
    CHECK(an.a0().act(e, ls[1].lagrangian) == ls[2].lagrangian);
    CHECK(an.a0().act(e, ls[2].lagrangian) == ls[1].lagrangian);
    CHECK(an.a0().act(e, ls[0].lagrangian) == ls[0].lagrangian);
  }
  SUBCASE("D8: the outer automorphism exchanges the Klein four subgroups") {
    auto g = dihedral_group(8);
    Analysis an(g);
    const auto& a0 = an.a0();
    const std::size_t e = a0.index(1, {0});
    int moved = 0;
    for (const auto& l : an.lagrangians()) {
      const auto img = a0.act(e, l.lagrangian);
      if (l.lagrangian.n.order() == 4 && !(l.lagrangian.n == img.n)) {
        CHECK(img.b.is_zero() == l.lagrangian.b.is_zero());
        ++moved;
      }
    }
    CHECK(moved == 4);
  }
  SUBCASE("every element fixes L(1,1)") {
    for (const char* spec : {"D8", "Q8", "A4", "C2xC2"}) {
      Analysis an(build_group(spec));
      for (std::size_t e = 0; e < an.a0().size(); ++e)
        CHECK(an.a0().act(e, canonical_lagrangian(an.group())) == canonical_lagrangian(an.group()));
    }
  }
}

TEST_CASE("L0") {
  Analysis d8(dihedral_group(8));
  CHECK(d8.l0().size() == 6);
  for (const auto& l : d8.l0()) CHECK_FALSE(l.n == center(d8.group()));
  Analysis q8(quaternion_group());
  CHECK(q8.l0().size() == 1);
  Analysis d30(dihedral_group(30));
  REQUIRE(d30.l0().size() == 4);
  for (const auto& l : d30.l0()) CHECK(l.b.is_zero());
}

TEST_CASE("orders") {
  for (const auto& [spec, order] : std::vector<std::pair<const char*, i64>>{
           {"S3", 2}, {"S4", 6}, {"A4", 12}, {"D8", 24}, {"Q8", 6}, {"D18", 6}, {"pq(2,5)", 4}, {"pq(3,7)", 4}}) {
    Analysis an(build_group(spec));
    CHECK_MESSAGE(an.brpic_order() == order, spec);
  }
}

TEST_CASE("permutation images") {
  Analysis a4(alternating_group(4));
  CHECK(a4.permutation().kernel.size() == 2);
  Analysis q8(quaternion_group());
  CHECK(q8.permutation().image.size() == 1);
  CHECK(q8.permutation().kernel.size() == 6);
  Analysis d8(dihedral_group(8));
  CHECK(d8.permutation().image.size() == 4);
  CHECK(d8.permutation().kernel.size() == 1);
}

TEST_CASE("identification") {
  Analysis d8(dihedral_group(8));
  CHECK(names(d8, {"S4"}));
  Analysis a4(alternating_group(4));
  CHECK(names(a4, {"D12"}));
  Analysis p(pq_group(3, 7));
  CHECK(names(p, {"Z/2xZ/2"}));
  Analysis s3(symmetric_group(3));
  CHECK(names(s3, {"Z/2"}));
  Analysis q8(quaternion_group());
  CHECK(names(q8, {"S3"}));
}

TEST_CASE("catalog") {
  const auto c24 = catalog(24);
  for (std::size_t i = 0; i < c24.size(); ++i)
    for (std::size_t j = i + 1; j < c24.size(); ++j) CHECK_FALSE(is_isomorphic(c24[i].group, c24[j].group));
  CHECK(catalog(8).size() == 5);
  CHECK(catalog(6).size() == 2);
  CHECK_THROWS_AS(catalog(1000), CapExceeded);
}

TEST_CASE("orthogonal oracle") {
  CHECK(orthogonal_oracle(cyclic_group(1)) == 1);
  CHECK(orthogonal_oracle(cyclic_group(2)) == 2);
  CHECK(orthogonal_oracle(cyclic_group(3)) == 4);
  CHECK(orthogonal_oracle(abelian_group({2, 2})) == 72);
  CHECK_THROWS_AS(orthogonal_oracle(cyclic_group(9)), CapExceeded);
  CHECK_THROWS_AS(orthogonal_oracle(symmetric_group(3)), InvalidInput);
}

TEST_CASE("property suites pass") {
  for (const char* spec : {"S3", "Q8", "C2xC4"}) {
    Analysis an(build_group(spec));
    for (const auto& c : run_checks(an)) CHECK_MESSAGE(c.pass, spec << " " << c.name << ": " << c.details);
  }
}
