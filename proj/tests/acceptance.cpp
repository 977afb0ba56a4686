// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "brpic/brpic.hpp"
#include "brpic/families.hpp"
#include "brpic/spec.hpp"

using namespace brpic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  std::vector<std::string> failures;
  std::ostringstream notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// Full pipeline; returns elapsed seconds.
double complete(Analysis& an) {
  const auto t0 = Clock::now();
  an.brpic_order();
  an.permutation();
  an.identification();
  return seconds_since(t0);
}

GroupPtr survivor_group(Analysis& an) {
  const auto& s = an.identification().survivors;
  if (s.size() != 1) return nullptr;
  for (const auto& e : catalog(static_cast<int>(an.brpic_order())))
    if (e.name == s.front()) return e.group;
  return nullptr;
}

bool survivors_are(Analysis& an, const GroupPtr& want) {
  const auto g = survivor_group(an);
  return g && is_isomorphic(g, want).has_value();
}

std::string list(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s + "}";
}

void s3(Verdict& v) {
  const auto t0 = Clock::now();
  Analysis an(build_group("S3"));
  complete(an);
  const double t = seconds_since(t0);
  v.expect(an.brpic_order() == 2, "order 2");
  v.expect(survivors_are(an, cyclic_group(2)), "identified as Z/2");
  v.expect(an.lagrangians().size() == 2, "two Lagrangians");
  v.expect(t < 1.0, "under 1 s");
  v.notes << "order " << an.brpic_order() << ", " << list(an.identification().survivors) << ", " << t << " s";
}

void s4(Verdict& v) {
  const auto t0 = Clock::now();
  Analysis an(build_group("S4"));
  complete(an);
  const double t = seconds_since(t0);
  v.expect(an.schur().factors() == std::vector<i64>{2}, "Schur Z/2");
  v.expect(an.automorphisms().outer.size() == 1, "Out trivial");
  v.expect(an.lagrangians().size() == 3 && an.l0().size() == 3, "|L| = |L0| = 3");
  v.expect(an.brpic_order() == 6, "order 6");
  v.expect(survivors_are(an, symmetric_group(3)), "identified as S3");
  const auto& ls = an.lagrangians();
  const std::size_t e = an.a0().index(0, {1});
  v.expect(ls[1].lagrangian.n.order() == 4 && ls[2].lagrangian.n == ls[1].lagrangian.n, "two Lagrangians on V");
  v.expect(an.a0().act(e, ls[1].lagrangian) == ls[2].lagrangian && an.a0().act(e, ls[2].lagrangian) == ls[1].lagrangian,
           "Schur class swaps them");
  v.expect(t < 60.0, "under 60 s");
  v.notes << "order " << an.brpic_order() << ", " << list(an.identification().survivors) << ", " << t << " s";
}

void a4(Verdict& v) {
  const auto t0 = Clock::now();
  Analysis an(build_group("A4"));
  complete(an);
  const double t = seconds_since(t0);
  v.expect(an.schur().factors() == std::vector<i64>{2}, "Schur Z/2");
  v.expect(is_isomorphic(an.out_group(), cyclic_group(2)).has_value(), "Out Z/2");
  v.expect(an.l0().size() == 3, "|L0| = 3");
  v.expect(an.brpic_order() == 12, "order 12");
  v.expect(an.permutation().kernel.size() == 2, "kernel of order 2");
  v.expect(survivors_are(an, dihedral_group(12)), "identified as D12");
  v.expect(t < 30.0, "under 30 s");
  v.notes << "order " << an.brpic_order() << ", kernel " << an.permutation().kernel.size() << ", "
          << list(an.identification().survivors) << ", " << t << " s";
}

void d8(Verdict& v) {
  auto g = dihedral_group(8);
  Analysis an(g);
  complete(an);
  // r of order 4, s a reflection; the classical numbering 1..6 of L0(D8).
  int r = -1, s = -1;
  for (int x = 0; x < g->order(); ++x) {
    if (r < 0 && g->element_order(x) == 4) r = x;
  }
  const auto rot = Subgroup::generated(g, std::vector<int>{r});
  for (int x = 0; x < g->order(); ++x)
    if (s < 0 && !rot.contains(x)) s = x;
  const int r2 = g->mul(r, r), sr = g->mul(s, r);
  const auto klein1 = Subgroup::generated(g, std::vector<int>{s, r2});
  const auto klein2 = Subgroup::generated(g, std::vector<int>{sr, r2});
  auto find = [&](const Subgroup& n, bool trivial) -> int {
    for (std::size_t i = 0; i < an.lagrangians().size(); ++i) {
      const auto& l = an.lagrangians()[i].lagrangian;
      if (l.n == n && l.b.is_zero() == trivial) return static_cast<int>(i);
    }
    return -1;
  };
  const std::vector<int> listing{find(Subgroup::trivial(g), true), find(rot, true), find(klein1, true),
                               find(klein2, true), find(klein1, false), find(klein2, false)};
  v.expect(an.lagrangians().size() == 7, "|L| = 7");
  v.expect(std::find(listing.begin(), listing.end(), -1) == listing.end(), "the six listed Lagrangians exist");
  std::set<Lagrangian> l0(an.l0().begin(), an.l0().end()), listed;
  for (int i : listing)
    if (i >= 0) listed.insert(an.lagrangians()[i].lagrangian);
  v.expect(l0 == listed, "L0 is exactly the listed six");

  // A0 image in that numbering.
  std::map<Lagrangian, int> number;
  for (std::size_t k = 0; k < listing.size(); ++k)
    if (listing[k] >= 0) number[an.lagrangians()[listing[k]].lagrangian] = static_cast<int>(k) + 1;
  std::set<std::vector<int>> image;
  for (std::size_t e = 0; e < an.a0().size(); ++e) {
    std::vector<int> p(7, 0);
    for (const auto& [l, k] : number) p[k] = number.count(an.a0().act(e, l)) ? number[an.a0().act(e, l)] : -1;
    image.insert(p);
  }
  const std::set<std::vector<int>> want{{0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 5, 6, 3, 4}, {0, 1, 2, 4, 3, 6, 5},
                                        {0, 1, 2, 6, 5, 4, 3}};
  v.expect(is_isomorphic(an.a0().as_group(), abelian_group({2, 2})).has_value(), "A0 = Z/2 x Z/2");
  v.expect(image == want, "A0 acts as {1,(35)(46),(34)(56),(36)(45)}");
  v.expect(an.permutation().kernel.size() == 1, "kernel trivial");
  v.expect(an.brpic_order() == 24, "order 24");
  v.expect(an.bimodules().orbits().size() == 24, "24 bimodule orbits");
  v.expect(survivors_are(an, symmetric_group(4)), "identified as S4");
  v.notes << "order " << an.brpic_order() << ", " << an.bimodules().orbits().size() << " orbits, "
          << list(an.identification().survivors);
}

void q8(Verdict& v) {
  auto g = quaternion_group();
  Analysis an(g);
  complete(an);
  v.expect(an.lagrangians().size() == 5, "|L| = 5");
  v.expect(an.l0().size() == 1, "|L0| = 1");
  v.expect(an.brpic_order() == 6, "order 6");
  v.expect(survivors_are(an, symmetric_group(3)), "identified as S3");
  for (const auto& l : an.lagrangians())
    if (l.lagrangian.n.order() > 1 && l.label.status == LabelStatus::Semidirect)
      v.expect(!is_isomorphic(l.label.groups.front(), g), "semidirect label over nontrivial N is not Q8");
  v.notes << "order " << an.brpic_order() << ", " << list(an.identification().survivors);
}

void pq(Verdict& v) {
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 7}, {2, 5}, {3, 13}}) {
    const std::string tag = "pq(" + std::to_string(p) + "," + std::to_string(q) + ")";
    const auto t0 = Clock::now();
    Analysis an(pq_group(p, q));
    complete(an);
    const int k = (q - 1) / p;
    v.expect(is_isomorphic(an.out_group(), cyclic_group(k)).has_value(), tag + " Out cyclic of order (q-1)/p");
    v.expect(an.lagrangians().size() == 2 && an.l0().size() == 2, tag + " |L| = |L0| = 2");
    v.expect(an.brpic_order() == 2 * k, tag + " order 2(q-1)/p");
    const auto& bc = an.bimodules();
    const auto base = canonical_lagrangian(an.group());
    for (const auto& o : bc.orbits())
      if (!(bc.canonical_image(o.representative) == base))
        v.expect(bc.is_involution(o.representative), tag + " orbits moving L(1,1) are involutions");
    v.expect(survivors_are(an, 2 * k == 2 ? cyclic_group(2) : dihedral_group(2 * k)), tag + " identified as D_{2(q-1)/p}");
    const double t = seconds_since(t0);
    v.expect(t < 60.0, tag + " under 60 s");
    v.notes << tag << ": order " << an.brpic_order() << " " << list(an.identification().survivors) << " " << t << " s; ";
  }
}

void dihedral(Verdict& v) {
  for (const auto& [n, out, l0, order, k] : std::vector<std::tuple<int, std::size_t, std::size_t, i64, int>>{
           {18, 3, 2, 6, 1}, {30, 4, 4, 16, 2}}) {
    const std::string tag = "D" + std::to_string(n);
    const auto t0 = Clock::now();
    Analysis an(dihedral_group(n));
    an.brpic_order();
    const auto& perm = an.permutation();
    v.expect(an.automorphisms().outer.size() == out, tag + " Out order");
    v.expect(an.schur().order() == 1, tag + " Schur trivial");
    v.expect(an.l0().size() == l0, tag + " |L0|");
    v.expect(an.brpic_order() == order, tag + " order");
    v.expect((perm.kernel.size() == an.a0().size()) == (perm.image.size() == 1), tag + " kernel = A0 iff action trivial");
    v.expect(an.brpic_order() / static_cast<i64>(perm.kernel.size()) == (i64{1} << k), tag + " image of order 2^k");
    const double t = seconds_since(t0);
    if (n == 30) v.expect(t < 300.0, tag + " under 5 min");
    v.notes << tag << ": order " << an.brpic_order() << ", image " << an.brpic_order() / static_cast<i64>(perm.kernel.size())
            << ", " << t << " s; ";
  }
}

void abelian(Verdict& v) {
  for (const char* spec : {"C2", "C3", "C2xC2", "C4"}) {
    Analysis an(build_group(spec));
    const i64 o = orthogonal_oracle(an.group());
    v.expect(an.brpic_order() == o, std::string(spec) + " order equals |O(A+A^,q)|");
    v.notes << spec << ": " << an.brpic_order() << "/" << o << "; ";
  }
}

void properties(Verdict& v) {
  const auto t0 = Clock::now();
  int total = 0;
  for (const char* spec : {"S3", "S4", "A4", "D8", "Q8", "C2xC2", "C2xC4", "C4", "pq(3,7)", "D18"}) {
    Analysis an(build_group(spec));
    for (const auto& c : run_checks(an)) {
      v.expect(c.pass, std::string(spec) + " " + c.name + ": " + c.details);
      ++total;
    }
  }
  const double t = seconds_since(t0);
  v.expect(t < 600.0, "whole suite under 10 min");
  v.notes << total << " checks in " << t << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"S3", s3},
      {"S4", s4},
      {"A4", a4},
      {"D8", d8},
      {"Q8", q8},
      {"pq family", pq},
      {"D18 and D30", dihedral},
      {"abelian oracle", abelian},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = v.failures.empty();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": ";
    if (ok)
      std::cout << v.notes.str();
    else
      for (const auto& f : v.failures) std::cout << "[" << f << "] ";
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
