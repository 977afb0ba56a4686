#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "brpic/config.hpp"
#include "brpic/error.hpp"
#include "brpic/families.hpp"
#include "brpic/goursat.hpp"
#include "brpic/group.hpp"
#include "brpic/spec.hpp"

using namespace brpic;

TEST_CASE("families have the advertised orders") {
  CHECK(symmetric_group(4)->order() == 24);
  CHECK(alternating_group(4)->order() == 12);
  CHECK(dihedral_group(8)->order() == 8);
  CHECK(quaternion_group()->order() == 8);
  CHECK(pq_group(3, 7)->order() == 21);
  CHECK(abelian_group({2, 4})->order() == 8);
  CHECK_FALSE(pq_group(3, 7)->is_abelian());
  CHECK(is_isomorphic(dicyclic_group(2), quaternion_group()));
  CHECK(is_isomorphic(pq_group(2, 3), symmetric_group(3)));
  CHECK(is_isomorphic(pq_group(2, 5), dihedral_group(10)));
}

TEST_CASE("table axioms are enforced") {
  auto g = cyclic_group(4);
  std::vector<int> t;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) t.push_back(g->mul(x, y));
  CHECK_NOTHROW(make_group(4, t, "ok"));
  std::swap(t[5], t[6]);
  CHECK_THROWS_AS(make_group(4, t, "bad"), InvalidInput);
}

TEST_CASE("normal abelian subgroups") {
  CHECK(normal_abelian_subgroups(quaternion_group()).size() == 5);
  const auto s4 = normal_abelian_subgroups(symmetric_group(4));
  REQUIRE(s4.size() == 2);
  CHECK(s4[0].order() == 1);
  CHECK(s4[1].order() == 4);
}

TEST_CASE("automorphisms") {
  const auto q = automorphism_group(quaternion_group());
  CHECK(q.all.size() == 24);
  CHECK(q.outer.size() == 6);
  CHECK(automorphism_group(abelian_group({2, 2})).all.size() == 6);
  CHECK(automorphism_group(symmetric_group(4)).outer.size() == 1);
  CHECK(automorphism_group(alternating_group(4)).outer.size() == 2);
  for (const auto& a : q.all) CHECK(a.is_homomorphism());
}

TEST_CASE("quotients and cores") {
  auto s4 = symmetric_group(4);
  const auto v = normal_abelian_subgroups(s4)[1];
  const auto q = quotient(v);
  CHECK(is_isomorphic(q.group, symmetric_group(3)));
  CHECK(q.projection.is_homomorphism());
  CHECK(center(dihedral_group(8)).order() == 2);
  CHECK(derived_subgroup(symmetric_group(4)).order() == 12);
}

TEST_CASE("Goursat triples of S4 x S4") {
  auto s4 = symmetric_group(4);
  const auto triples = goursat_full_subgroups(s4, s4, true);
  int trivial_legs = 0, v_legs = 0;
  for (const auto& t : triples) {
    if (t.l1.order() == 1 && t.l2.order() == 1) ++trivial_legs;
    if (t.l1.order() == 4 && t.l2.order() == 4) ++v_legs;
  }
  CHECK(trivial_legs == 24);
  CHECK(v_legs == 6);
  CHECK(triples.size() == 30);
}

TEST_CASE("Goursat agrees with brute force") {
  auto c2 = cyclic_group(2);
  CHECK(goursat_full_subgroups(c2, c2, false).size() == 2);
  for (const char* s : {"C2", "S3", "C4", "Q8", "D8"}) {
    auto g = build_group(s);
    const auto p = direct_product(g, opposite(g));
    std::set<std::vector<int>> a, b;
    for (const auto& t : goursat_full_subgroups(g, opposite(g), false)) a.insert(realize(t, p).elements());
    for (const auto& l : full_projection_subgroups(p)) b.insert(l.elements());
    CHECK_MESSAGE(a == b, s);
  }
}

TEST_CASE("spec parsing") {
  CHECK(build_group("D8")->order() == 8);
  const auto a = build_group("C2xC4");
  CHECK(a->is_abelian());
  CHECK(is_isomorphic(a, abelian_group({2, 4})));
  CHECK_THROWS_AS(parse_spec("D7"), ParseError);
  CHECK_THROWS_AS(parse_spec("S"), ParseError);
  CHECK_THROWS_AS(parse_spec("C4y"), ParseError);
  CHECK_THROWS(build_group("pq(3,5)"));
  CHECK(is_isomorphic(build_group("perm:[(1,2,3);(1,2)]"), symmetric_group(3)));
  for (const char* s : {"S4", "A4", "D18", "Q8", "C6", "C2xC4", "pq(3,7)", "perm:[(1,2,3);(1,2)]", "S3xC2"})
    CHECK(parse_spec(parse_spec(s).canonical()).canonical() == parse_spec(s).canonical());
  CHECK(parse_spec("S3xC2").canonical() == "S3xC2");
}

TEST_CASE("table files") {
  const std::string path = "brpic_test_table.json";
  {
    std::ofstream out(path);
    out << R"({"order": 3, "table": [0,1,2, 1,2,0, 2,0,1]})";
  }
  CHECK(is_isomorphic(build_group("table:" + path), cyclic_group(3)));
  {
    std::ofstream out(path);
    out << R"({"order": 3, "table": [0,1,2, 1,2,0]})";
  }
  CHECK_THROWS(build_group("table:" + path));
  std::remove(path.c_str());
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(build_group("S5"), CapExceeded);
  const Caps saved = caps();
  Caps small = saved;
  small.analysis_order = 8;
  set_caps(small);
  CHECK_THROWS_AS(build_group("S4"), CapExceeded);
  set_caps(saved);
  CHECK_NOTHROW(build_group("S4"));
}

TEST_CASE("nested table rows") {
  const std::string path = "brpic_test_rows.json";
  {
    std::ofstream out(path);
    out << R"({"order": 2, "table": [[0,1],[1,0]]})";
  }
  CHECK(is_isomorphic(build_group("table:" + path), cyclic_group(2)));
  std::remove(path.c_str());
}
