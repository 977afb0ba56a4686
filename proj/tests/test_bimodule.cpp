#include <doctest.h>

#include <map>
#include <set>

#include "brpic/bimodule.hpp"
#include "brpic/error.hpp"
#include "brpic/families.hpp"
#include "brpic/spec.hpp"

using namespace brpic;

TEST_CASE("orbit counts") {
  for (const auto& [spec, count] : std::vector<std::pair<const char*, std::size_t>>{
           {"S3", 2}, {"Q8", 6}, {"D8", 24}, {"S4", 6}, {"A4", 12}, {"C2xC2", 72}, {"pq(3,7)", 4}}) {
    const BimoduleClassification bc(build_group(spec));
    CHECK_MESSAGE(bc.orbits().size() == count, spec);
  }
}

TEST_CASE("identity datum") {
  for (const char* spec : {"S3", "D8", "Q8"}) {
    auto g = build_group(spec);
    const BimoduleClassification bc(g);
    const auto id = bc.identity_datum();
    CHECK(bc.verify(id));
    CHECK(id.l1.order() == 1);
    CHECK(bc.canonical_image(id) == canonical_lagrangian(g));
    CHECK(bc.is_involution(id));
    CHECK(bc.orbit_of(bc.inverse(id)) == bc.orbit_of(id));
  }
}

TEST_CASE("inverses") {
  for (const char* spec : {"S3", "D8"}) {
    const BimoduleClassification bc(build_group(spec));
    for (const auto& o : bc.orbits()) {
      const auto inv = bc.inverse(o.representative);
      CHECK(bc.verify(inv));
      CHECK(inv.l1.elements() == o.representative.l2.elements());
      CHECK(bc.orbit_of(bc.inverse(inv)) == bc.orbit_of(o.representative));
      int witness = -1;
      if (bc.is_involution(o.representative, &witness)) CHECK(witness >= 0);
    }
  }
}

TEST_CASE("every datum is invertible and |L| = |L1| |G|") {
  for (const char* spec : {"D8", "A4", "pq(3,7)"}) {
    const BimoduleClassification bc(build_group(spec));
    for (const auto& o : bc.orbits()) {
      CHECK(bc.verify(o.representative));
      CHECK(o.representative.l.order() == o.representative.l1.order() * bc.group()->order());
    }
  }
}

TEST_CASE("pq(3,7): the datum with legs Z7 has order two") {
  const BimoduleClassification bc(pq_group(3, 7));
  int seen = 0;
  for (const auto& o : bc.orbits())
    if (o.representative.l1.order() == 7) {
      CHECK(bc.is_involution(o.representative));
      ++seen;
    }
  CHECK(seen > 0);
}

TEST_CASE("pq(3,7): H2 of L restricts isomorphically to the legs") {
  const BimoduleClassification bc(pq_group(3, 7));
  for (const auto& o : bc.orbits()) {
    const auto& d = o.representative;
    if (d.l1.order() != 7) continue;
    const GroupPtr lg = d.mu.group;
    const SchurMultiplier sl(lg, lg->order());
    std::vector<int> legs;
    for (int i = 0; i < d.l.order(); ++i) {
      const int x = d.l.elements()[i];
      if (d.l1.contains(bc.product().first(x)) && d.l2.contains(bc.product().second(x))) legs.push_back(i);
    }
    const Subgroup a(lg, legs);
    REQUIRE(a.order() == 49);
    const SchurMultiplier sa(a.as_group(), lg->order());
    CHECK(sl.order() == 7);
    CHECK(sa.order() == 7);
    std::set<std::vector<i64>> images;
    for (const auto& c : sl.elements()) images.insert(sa.classify(restrict(sl.representative(c), a)));
    CHECK(images.size() == 7);
    break;
  }
}

TEST_CASE("D26 has elements of order greater than two") {
  const BimoduleClassification bc(dihedral_group(26));
  int non = 0;
  for (const auto& o : bc.orbits()) non += bc.is_involution(o.representative) ? 0 : 1;
  CHECK(non > 0);
}

TEST_CASE("canonical images") {
  {
    auto q8 = quaternion_group();
    const BimoduleClassification bc(q8);
    for (const auto& o : bc.orbits()) CHECK(bc.canonical_image(o.representative) == canonical_lagrangian(q8));
  }
  {
    auto d8 = dihedral_group(8);
    const BimoduleClassification bc(d8);
    std::map<Lagrangian, int> census;
    for (const auto& o : bc.orbits()) ++census[bc.canonical_image(o.representative)];
    CHECK(census.size() == 6);
    for (const auto& [l, k] : census) {
      CHECK(k == 4);
      CHECK_FALSE(l.n == center(d8));
    }
  }
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(BimoduleClassification(build_group("C2xC2xC2xC2xC2xC2")), CapExceeded);
}
