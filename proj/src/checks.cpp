#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "brpic/brpic.hpp"
#include "brpic/error.hpp"
#include "brpic/families.hpp"
#include "brpic/goursat.hpp"

namespace brpic {

namespace {

using Body = std::function<std::string()>;  // throws or returns "FAIL: ..." on failure

Check run(const std::string& name, const Body& body) {
  Check c{name, false, {}};
  try {
    c.details = body();
    c.pass = c.details.rfind("FAIL", 0) != 0;
  } catch (const std::exception& e) {
    c.details = std::string("FAIL: ") + e.what();
  }
  return c;
}

std::string fail(const std::string& what) { return "FAIL: " + what; }

i64 class_order(const std::vector<i64>& c, const std::vector<i64>& factors) {
  i64 o = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const i64 k = factors[i] / gcd64(c[i], factors[i]);
    o = o / gcd64(o, k) * k;
  }
  return o;
}

std::string cocycle_scan(Analysis& an) {
  const auto& s = an.schur();
  const GModule m = GModule::trivial(an.group(), s.modulus());
  std::size_t n = 0;
  for (const auto& c : s.elements()) {
    const Cochain2 f = s.representative(c);
    if (!is_cocycle(m, f)) return fail("Schur representative is not a cocycle");
    if (!satisfies_generator_identity(m, f, an.group()->generators())) return fail("generator identity fails");
    if (s.classify(f) != c) return fail("classification does not round-trip");
    ++n;
  }
  const H2 h(m);
  for (std::size_t j = 0; j < h.factors().size(); ++j) {
    std::vector<i64> c(h.factors().size(), 0);
    c[j] = 1;
    if (!is_cocycle(m, h.representative(c))) return fail("H2 basis representative is not a cocycle");
  }
  return std::to_string(n) + " Schur representatives and " + std::to_string(h.factors().size()) +
         " H2 generators pass the full scan";
}

std::string h2_order(Analysis& an) {
  const auto& g = an.group();
  const H2 h(GModule::trivial(g, g->order()));
  const i64 ab = g->order() / derived_subgroup(g).order();
  const i64 want = an.schur().order() * ab;
  std::ostringstream os;
  os << "|H2(G,Z/" << g->order() << ")| = " << h.order() << ", |Schur| |G^ab| = " << want;
  return h.order() == want ? os.str() : fail(os.str());
}

std::string coprime(Analysis& an) {
  const auto& g = an.group();
  i64 m = 2;
  while (gcd64(m, g->order()) != 1) ++m;
  const GModule mod = GModule::trivial(g, m);
  const i64 h1 = H1(mod).order(), h2 = H2(mod).order();
  std::ostringstream os;
  os << "H1 and H2 with Z/" << m << " coefficients have orders " << h1 << ", " << h2;
  return h1 == 1 && h2 == 1 ? os.str() : fail(os.str());
}

std::string sylow(Analysis& an) {
  const auto& g = an.group();
  const auto& s = an.schur();
  std::ostringstream os;
  const auto subs = all_subgroups(g);
  for (i64 p : prime_divisors(g->order())) {
    const i64 pk = ipow(p, valuation(g->order(), p));
    const auto it = std::find_if(subs.begin(), subs.end(), [&](const Subgroup& h) { return h.order() == pk; });
    if (it == subs.end()) return fail("no Sylow subgroup for " + std::to_string(p));
    const SchurMultiplier sp(it->as_group(), g->order());
    int tested = 0;
    for (const auto& c : s.elements()) {
      const i64 o = class_order(c, s.factors());
      if (o == 1 || ipow(p, valuation(o, p)) != o) continue;
      const auto r = sp.classify(restrict(s.representative(c), *it));
      if (std::all_of(r.begin(), r.end(), [](i64 v) { return v == 0; }))
        return fail("a " + std::to_string(p) + "-primary class restricts to zero");
      ++tested;
    }
    os << "p=" << p << ": " << tested << " classes; ";
  }
  return os.str() + "restriction injective";
}

std::string five_term(Analysis& an) {
  const auto& g = an.group();
  const auto subs = all_subgroups(g);
  for (const auto& n : normal_abelian_subgroups(g)) {
    if (n.order() == 1 || n.order() == g->order()) continue;
    for (const auto& t : subs) {
      if (static_cast<long>(t.order()) * n.order() != g->order()) continue;
      bool meets = false;
      for (int x : t.elements()) meets = meets || (x != 0 && n.contains(x));
      if (meets) continue;
      const auto rep = five_term_check(n, t);
      return rep.ok() ? rep.summary() : fail(rep.summary());
    }
  }
  return "no split abelian normal subgroup; nothing to check";
}

std::string goursat(Analysis& an) {
  GroupPtr g = an.group();
  GroupPtr h = opposite(g);
  if (g->order() * g->order() > 64) {
    if (2 * g->order() > 64) return "product too large; nothing to check";
    h = cyclic_group(2);
  }
  const auto p = direct_product(g, h);
  std::set<std::vector<int>> via, brute;
  for (const auto& t : goursat_full_subgroups(g, h, false)) via.insert(realize(t, p).elements());
  for (const auto& l : full_projection_subgroups(p)) brute.insert(l.elements());
  std::ostringstream os;
  os << via.size() << " realized, " << brute.size() << " by brute force on order " << p.group->order();
  return via == brute ? os.str() : fail(os.str());
}

std::string bicharacters(Analysis& an) {
  const auto& g = an.group();
  int n = 0;
  for (const auto& sub : normal_abelian_subgroups(g)) {
    const auto a = abelian_structure(sub);
    for (const auto& b : alternating_forms(sub, g->order())) {
      if (!is_bilinear(b)) return fail("enumerated form is not bilinear");
      const Cochain2 mu = class_from_bicharacter(a, b);
      const auto whole = Subgroup::whole(mu.group);
      const auto back = alt_bicharacter(mu, whole, whole);
      if (back.values != b.values) return fail("Alt of the upper-triangular cocycle differs from the form");
      ++n;
    }
  }
  return std::to_string(n) + " forms round-trip";
}

std::string action(Analysis& an) {
  const auto& a = an.a0();
  const auto& ls = an.lagrangians();
  const Lagrangian base = canonical_lagrangian(an.group());
  std::vector<std::vector<int>> act(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (!(a.act(e, base) == base)) return fail("an element of A0 moves L(1,1)");
    for (const auto& l : ls) {
      const int k = an.lagrangian_index(a.act(e, l.lagrangian));
      if (k < 0) return fail("image is not a Lagrangian");
      const auto& img = ls[k];
      if (l.in_l0 && img.in_l0 && *l.in_l0 != *img.in_l0) return fail("dual-group label is not invariant");
      act[e].push_back(k);
    }
  }
  for (std::size_t e = 0; e < a.size(); ++e)
    for (std::size_t f = 0; f < a.size(); ++f) {
      const auto ef = a.mul(e, f);
      for (std::size_t i = 0; i < ls.size(); ++i)
        if (act[ef][i] != act[e][act[f][i]]) return fail("act(ef) differs from act(e) act(f)");
    }
  return std::to_string(a.size()) + " elements on " + std::to_string(ls.size()) + " Lagrangians";
}

std::string orbits(Analysis& an) {
  if (!an.bimodules_available()) return "bimodule enumeration above the cap; nothing to check";
  const auto& bc = an.bimodules();
  const i64 formula = an.schur().order() * static_cast<i64>(an.automorphisms().outer.size()) *
                      static_cast<i64>(an.l0().size());
  std::map<Lagrangian, int> census;
  for (const auto& o : bc.orbits()) {
    if (!bc.verify(o.representative)) return fail("a representative fails the invertibility conditions");
    if (bc.orbit_of(bc.inverse(bc.inverse(o.representative))) != bc.orbit_of(o.representative))
      return fail("double inverse leaves the orbit");
    ++census[bc.canonical_image(o.representative)];
  }
  const auto orbits = static_cast<i64>(bc.orbits().size());
  for (const auto& [l, k] : census)
    if (static_cast<i64>(k) * static_cast<i64>(an.l0().size()) != orbits) return fail("canonical images are not equidistributed");
  std::ostringstream os;
  os << orbits << " orbits, formula " << formula;
  return orbits == formula ? os.str() : fail(os.str());
}

std::string oracle(Analysis& an) {
  const auto& g = an.group();
  if (!g->is_abelian() || g->order() > 8) return "not a small abelian group; nothing to check";
  const i64 o = orthogonal_oracle(g);
  std::ostringstream os;
  os << "|O(A+A^,q)| = " << o << ", order " << an.brpic_order();
  return o == an.brpic_order() ? os.str() : fail(os.str());
}

}  // namespace

std::vector<Check> run_checks(Analysis& an) {
  return {
      run("cocycle-scan", [&] { return cocycle_scan(an); }),
      run("h2-order", [&] { return h2_order(an); }),
      run("coprime-vanishing", [&] { return coprime(an); }),
      run("sylow-injectivity", [&] { return sylow(an); }),
      run("five-term", [&] { return five_term(an); }),
      run("goursat-brute-force", [&] { return goursat(an); }),
      run("bicharacter-round-trip", [&] { return bicharacters(an); }),
      run("action-axioms", [&] { return action(an); }),
      run("orbit-count", [&] { return orbits(an); }),
      run("orthogonal-oracle", [&] { return oracle(an); }),
  };
}

}  // namespace brpic
