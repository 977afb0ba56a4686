#include "brpic/families.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <numeric>

#include <json.hpp>

#include "brpic/config.hpp"
#include "brpic/error.hpp"

namespace brpic {

namespace {

using Key = std::vector<int>;
using Mul = std::function<Key(const Key&, const Key&)>;

int effective_cap(int max_order) { return max_order > 0 ? max_order : caps().analysis_order; }

// Enumerates the closure of `gens` breadth-first and tabulates the product.
GroupPtr build_from_words(const Key& identity, const std::vector<Key>& gens, const Mul& mul, std::string name,
                          int max_order) {
  const int cap = effective_cap(max_order);
  std::map<Key, int> index{{identity, 0}};
  std::vector<Key> elems{identity};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Key y = mul(elems[head], g);
      if (index.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (static_cast<int>(elems.size()) > cap)
          throw CapExceeded(name + " has order above the cap " + std::to_string(cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = index.at(mul(elems[a], elems[b]));
  return make_group(n, std::move(table), std::move(name));
}

int mod(long a, long m) { return static_cast<int>(((a % m) + m) % m); }

// Permutations act on 0..d-1; (a*b)(i) = a(b(i)).
Key compose_perm(const Key& a, const Key& b) {
  Key r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Key identity_perm(int d) {
  Key r(static_cast<std::size_t>(d));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

}  // namespace

GroupPtr symmetric_group(int n, int max_order) {
  if (n < 1) throw InvalidInput("symmetric group needs n >= 1");
  if (n == 1) return make_group(1, {0}, "S1");
  Key cyc = identity_perm(n), tr = identity_perm(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::swap(tr[0], tr[1]);
  return build_from_words(identity_perm(n), {cyc, tr}, compose_perm, "S" + std::to_string(n), max_order);
}

GroupPtr alternating_group(int n, int max_order) {
  if (n < 1) throw InvalidInput("alternating group needs n >= 1");
  if (n < 3) return make_group(1, {0}, "A" + std::to_string(n));
  // 3-cycles (0 1 k) generate A_n.
  std::vector<Key> gens;
  for (int k = 2; k < n; ++k) {
    Key c = identity_perm(n);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(c);
  }
  return build_from_words(identity_perm(n), gens, compose_perm, "A" + std::to_string(n), max_order);
}

GroupPtr dihedral_group(int order, int max_order) {
  if (order < 2 || order % 2 != 0) throw InvalidInput("dihedral groups have even order");
  const int n = order / 2;
  // (k, e) = r^k s^e
  Mul mul = [n](const Key& a, const Key& b) {
    return Key{mod(a[0] + (a[1] ? -b[0] : b[0]), n), (a[1] + b[1]) % 2};
  };
  return build_from_words({0, 0}, {{1 % n, 0}, {0, 1}}, mul, "D" + std::to_string(order), max_order);
}

GroupPtr dicyclic_group(int m, int max_order) {
  if (m < 1) throw InvalidInput("dicyclic groups need m >= 1");
  // (k, e) = a^k x^e with a^{2m} = 1, x^2 = a^m, x a x^-1 = a^-1.
  const int n = 2 * m;
  Mul mul = [n, m](const Key& a, const Key& b) {
    const int k = a[0] + (a[1] ? -b[0] : b[0]);
    const int extra = (a[1] && b[1]) ? m : 0;
    return Key{mod(k + extra, n), (a[1] + b[1]) % 2};
  };
  return build_from_words({0, 0}, {{1 % n, 0}, {0, 1}}, mul, m == 2 ? "Q8" : "Dic" + std::to_string(4 * m),
                          max_order);
}

GroupPtr quaternion_group() {
  // Units +-1, +-i, +-j, +-k as (sign, unit) with unit 0..3 = 1, i, j, k.
  static const int unit_table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_table[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Mul mul = [](const Key& a, const Key& b) {
    return Key{(a[0] + b[0] + sign_table[a[1]][b[1]]) % 2, unit_table[a[1]][b[1]]};
  };
  return build_from_words({0, 0}, {{0, 1}, {0, 2}}, mul, "Q8", 8);
}

GroupPtr cyclic_group(int n, int max_order) {
  if (n < 1) throw InvalidInput("cyclic group needs n >= 1");
  if (n > effective_cap(max_order)) throw CapExceeded("C" + std::to_string(n) + " has order above the cap");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return make_group(n, std::move(table), "C" + std::to_string(n));
}

GroupPtr pq_group(int p, int q, int max_order) {
  auto is_prime = [](int v) {
    if (v < 2) return false;
    for (int d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  if (!is_prime(p) || !is_prime(q)) throw InvalidInput("pq(p,q) needs primes p and q");
  if (q % p != 1) throw InvalidInput("pq(p,q) needs q = 1 mod p");
  int a = 2;
  for (;; ++a) {
    long t = 1;
    for (int i = 0; i < p; ++i) t = t * a % q;
    if (t == 1 && a % q != 1) break;
  }
  std::vector<int> apow(static_cast<std::size_t>(p), 1);
  for (int j = 1; j < p; ++j) apow[j] = static_cast<int>(static_cast<long>(apow[j - 1]) * a % q);
  // (i, j) = x^i y^j
  Mul mul = [p, q, apow](const Key& u, const Key& v) {
    return Key{static_cast<int>((u[0] + static_cast<long>(apow[u[1]]) * v[0]) % q), (u[1] + v[1]) % p};
  };
  return build_from_words({0, 0}, {{1, 0}, {0, 1}}, mul,
                          "pq(" + std::to_string(p) + "," + std::to_string(q) + ")", max_order);
}

GroupPtr abelian_group(const std::vector<int>& factors, int max_order) {
  std::vector<Key> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 1) throw InvalidInput("cyclic factor must be positive");
    Key g(factors.size(), 0);
    g[i] = 1 % factors[i];
    gens.push_back(g);
  }
  Mul mul = [factors](const Key& a, const Key& b) {
    Key r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % factors[i];
    return r;
  };
  std::string name;
  for (int f : factors) name += (name.empty() ? "C" : "xC") + std::to_string(f);
  return build_from_words(Key(factors.size(), 0), gens, mul, name.empty() ? "C1" : name, max_order);
}

GroupPtr permutation_group(const std::vector<std::vector<std::vector<int>>>& gens, int max_order) {
  int degree = 1;
  for (const auto& g : gens)
    for (const auto& cyc : g)
      for (int pt : cyc) {
        if (pt < 1) throw InvalidInput("permutation points are numbered from 1");
        degree = std::max(degree, pt);
      }
  std::vector<Key> perms;
  for (const auto& g : gens) {
    Key p = identity_perm(degree);
    // Cycles are composed right to left, like the permutations themselves.
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      Key c = identity_perm(degree);
      for (std::size_t i = 0; i < it->size(); ++i) c[(*it)[i] - 1] = (*it)[(i + 1) % it->size()] - 1;
      std::vector<char> seen(static_cast<std::size_t>(degree), 0);
      for (int pt : *it) {
        if (seen[pt - 1]) throw InvalidInput("repeated point inside a cycle");
        seen[pt - 1] = 1;
      }
      p = compose_perm(c, p);
    }
    perms.push_back(p);
  }
  return build_from_words(identity_perm(degree), perms, compose_perm, "perm", max_order);
}

GroupPtr table_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open table file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("table file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    throw InvalidInput("table file needs `order` and `table`");
  if (!doc["order"].is_number_integer()) throw InvalidInput("table order must be an integer");
  const int n = doc["order"].get<int>();
  if (n < 1) throw InvalidInput("table order must be positive");
  if (n > caps().analysis_order) throw CapExceeded("table group of order " + std::to_string(n) + " exceeds the cap");
  const auto& rows = doc["table"];
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  if (!rows.is_array()) throw InvalidInput("table must be an array");
  // Either `order` rows or one flat row-major list.
  const bool flat = static_cast<long>(rows.size()) == static_cast<long>(n) * n && (n == 1 || !rows[0].is_array());
  if (flat) {
    for (const auto& v : rows) {
      if (!v.is_number_integer()) throw InvalidInput("table entries must be integers");
      table.push_back(v.get<int>());
    }
    return make_group(n, std::move(table), doc.value("name", std::string("table")));
  }
  if (static_cast<int>(rows.size()) != n) throw InvalidInput("table must have `order` rows");
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw InvalidInput("table row has wrong length");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InvalidInput("table entries must be integers");
      table.push_back(v.get<int>());
    }
  }
  return make_group(n, std::move(table), doc.value("name", std::string("table")));
}

}  // namespace brpic
