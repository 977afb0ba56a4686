#include "brpic/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "brpic/config.hpp"
#include "brpic/error.hpp"

namespace brpic {

namespace {

// Breadth-first closure of `gens` using right multiplication. Returns the
// number of elements reached; `stamp`/`mark` avoid reallocation across calls.
int closure_size(const FiniteGroup& g, std::span<const int> gens, std::vector<int>& mark, int stamp,
                 std::vector<int>& queue) {
  queue.clear();
  queue.push_back(0);
  mark[0] = stamp;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int s : gens) {
      const int y = g.mul(x, s);
      if (mark[y] != stamp) {
        mark[y] = stamp;
        queue.push_back(y);
      }
    }
  }
  return static_cast<int>(queue.size());
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string name, bool check_associativity)
    : n_(order), table_(std::move(table)), name_(std::move(name)) {
  if (n_ <= 0) throw InvalidInput("group order must be positive");
  const auto n = static_cast<std::size_t>(n_);
  if (table_.size() != n * n) throw InvalidInput("multiplication table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= n_) throw InvalidInput("multiplication table entry out of range");
  for (int x = 0; x < n_; ++x)
    if (mul(0, x) != x || mul(x, 0) != x) throw InvalidInput("index 0 is not a two-sided identity");

  std::vector<int> seen(n, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      const int v = mul(a, b);
      if (seen[v] == 2 * a) throw InvalidInput("multiplication table row is not a permutation");
      seen[v] = 2 * a;
    }
  std::fill(seen.begin(), seen.end(), -1);
  for (int b = 0; b < n_; ++b)
    for (int a = 0; a < n_; ++a) {
      const int v = mul(a, b);
      if (seen[v] == b) throw InvalidInput("multiplication table column is not a permutation");
      seen[v] = b;
    }

  inverse_.assign(n, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  for (int a = 0; a < n_; ++a)
    if (inverse_[a] < 0 || mul(inverse_[a], a) != 0) throw InvalidInput("element without two-sided inverse");

  if (check_associativity && n_ <= caps().analysis_order) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const int ab = mul(a, b);
        for (int c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) throw InvalidInput("multiplication table is not associative");
      }
  }

  orders_.assign(n, 1);
  for (int a = 1; a < n_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }
  for (int a = 0; a < n_ && abelian_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  std::vector<int> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return orders_[a] > orders_[b]; });
  std::vector<int> mark(n, 0), queue;
  std::vector<char> member(n, 0);
  member[0] = 1;
  int stamp = 0;
  for (int e : by_order) {
    if (member[e]) continue;
    generators_.push_back(e);
    closure_size(*this, generators_, mark, ++stamp, queue);
    for (int x : queue) member[x] = 1;
  }
}

int FiniteGroup::power(int a, long k) const {
  const long ord = orders_[a];
  long e = ((k % ord) + ord) % ord;
  int result = 0;
  int base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<int> FiniteGroup::closure(std::span<const int> gens) const {
  std::vector<int> mark(static_cast<std::size_t>(n_), 0), queue;
  closure_size(*this, gens, mark, 1, queue);
  std::sort(queue.begin(), queue.end());
  return queue;
}

GroupPtr make_group(int order, std::vector<int> table, std::string name, bool check_associativity) {
  return std::make_shared<const FiniteGroup>(order, std::move(table), std::move(name), check_associativity);
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  const int n = parent_->order();
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || elements_.front() != 0) throw InvalidInput("subgroup must contain the identity");
  member_.assign(static_cast<std::size_t>(n), 0);
  position_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 0 || elements_[i] >= n) throw InvalidInput("subgroup element out of range");
    member_[elements_[i]] = 1;
    position_[elements_[i]] = static_cast<int>(i);
  }
  abelian_ = true;
  for (int a : elements_)
    for (int b : elements_) {
      const int ab = parent_->mul(a, b);
      if (!member_[ab]) throw InvalidInput("subset is not closed under multiplication");
      if (abelian_ && ab != parent_->mul(b, a)) abelian_ = false;
    }
  normal_ = true;
  for (int g : parent_->generators()) {
    for (int h : elements_)
      if (!member_[parent_->conj(g, h)]) {
        normal_ = false;
        break;
      }
    if (!normal_) break;
  }
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const int> gens) {
  auto elems = parent->closure(gens);
  return Subgroup(std::move(parent), std::move(elems));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(static_cast<std::size_t>(parent->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

GroupPtr Subgroup::as_group(const std::string& name) const {
  const auto m = elements_.size();
  std::vector<int> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i * m + j] = position_[parent_->mul(elements_[i], elements_[j])];
  return make_group(static_cast<int>(m), std::move(table), name.empty() ? parent_->name() + "-sub" : name, false);
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

// ---------------------------------------------------------------------------

bool GroupMap::is_homomorphism() const {
  const int n = source->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[source->mul(a, b)] != target->mul(images[a], images[b])) return false;
  return true;
}

bool GroupMap::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> hit(static_cast<std::size_t>(target->order()), 0);
  for (int v : images) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

GroupMap GroupMap::inverse() const {
  if (!is_bijective()) throw InvalidInput("map is not bijective");
  GroupMap r{target, source, std::vector<int>(images.size())};
  for (std::size_t i = 0; i < images.size(); ++i) r.images[images[i]] = static_cast<int>(i);
  return r;
}

GroupMap GroupMap::identity(const GroupPtr& g) {
  GroupMap r{g, g, std::vector<int>(static_cast<std::size_t>(g->order()))};
  std::iota(r.images.begin(), r.images.end(), 0);
  return r;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  GroupMap r{inner.source, outer.target, std::vector<int>(inner.images.size())};
  for (std::size_t i = 0; i < inner.images.size(); ++i) r.images[i] = outer.images[inner.images[i]];
  return r;
}

GroupMap inner_automorphism(const GroupPtr& group, int g) {
  GroupMap r{group, group, std::vector<int>(static_cast<std::size_t>(group->order()))};
  for (int x = 0; x < group->order(); ++x) r.images[x] = group->conj(g, x);
  return r;
}

GroupPtr opposite(const GroupPtr& group) {
  const int n = group->order();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = group->mul(b, a);
  return make_group(n, std::move(table), group->name() + "^op", false);
}

Product direct_product(const GroupPtr& g, const GroupPtr& h) {
  const long total = static_cast<long>(g->order()) * h->order();
  if (total > caps().product_order)
    throw CapExceeded("direct product of order " + std::to_string(total) + " exceeds the product cap " +
                      std::to_string(caps().product_order));
  const int n = g->order(), m = h->order(), nm = static_cast<int>(total);
  std::vector<int> table(static_cast<std::size_t>(nm) * nm);
  for (int x = 0; x < nm; ++x)
    for (int y = 0; y < nm; ++y)
      table[static_cast<std::size_t>(x) * nm + y] = g->mul(x / m, y / m) * m + h->mul(x % m, y % m);
  auto p = make_group(nm, std::move(table), g->name() + "x" + h->name(), false);
  Product out{p, {g, p, std::vector<int>(static_cast<std::size_t>(n))}, {h, p, std::vector<int>(static_cast<std::size_t>(m))}};
  for (int a = 0; a < n; ++a) out.left.images[a] = a * m;
  for (int b = 0; b < m; ++b) out.right.images[b] = b;
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& group) {
  if (group->order() > caps().analysis_order)
    throw CapExceeded("subgroup enumeration limited to order " + std::to_string(caps().analysis_order));
  const int n = group->order();
  std::map<std::vector<int>, std::vector<int>> found;  // elements -> generators
  std::vector<int> cyclic_gens;
  for (int g = 0; g < n; ++g) {
    auto elems = group->closure(std::span<const int>(&g, 1));
    if (found.emplace(elems, std::vector<int>{g}).second && g != 0) cyclic_gens.push_back(g);
  }
  std::vector<std::vector<int>> queue;
  for (const auto& [elems, gens] : found) queue.push_back(elems);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto elems = queue[head];
    const auto gens = found[elems];
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    for (int x : elems) member[x] = 1;
    for (int c : cyclic_gens) {
      if (member[c]) continue;
      auto g2 = gens;
      g2.push_back(c);
      auto joined = group->closure(g2);
      if (found.emplace(joined, g2).second) queue.push_back(std::move(joined));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& entry : found) out.emplace_back(group, entry.first);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& group) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(group))
    if (s.is_normal()) out.push_back(std::move(s));
  return out;
}

std::vector<Subgroup> normal_abelian_subgroups(const GroupPtr& group) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(group))
    if (s.is_normal() && s.is_abelian()) out.push_back(std::move(s));
  return out;
}

Subgroup centralizer(const GroupPtr& group, std::span<const int> elements) {
  std::vector<int> out;
  for (int g = 0; g < group->order(); ++g) {
    bool ok = true;
    for (int x : elements)
      if (group->mul(g, x) != group->mul(x, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup(group, std::move(out));
}

Subgroup center(const GroupPtr& group) { return centralizer(group, group->generators()); }

Subgroup derived_subgroup(const GroupPtr& group) {
  const int n = group->order();
  std::vector<char> is_comm(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      is_comm[group->mul(group->mul(a, b), group->mul(group->inv(a), group->inv(b)))] = 1;
  std::vector<int> comms;
  for (int x = 0; x < n; ++x)
    if (is_comm[x]) comms.push_back(x);
  return Subgroup::generated(group, comms);
}

Subgroup core(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<int> out;
  for (int x : h.elements()) {
    bool ok = true;
    for (int y = 0; y < g->order() && ok; ++y) ok = h.contains(g->conj(y, x));
    if (ok) out.push_back(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup conjugate(const Subgroup& h, int g) {
  std::vector<int> out;
  out.reserve(h.elements().size());
  for (int x : h.elements()) out.push_back(h.parent()->conj(g, x));
  return Subgroup(h.parent(), std::move(out));
}

Subgroup image(const GroupMap& map, const Subgroup& h) {
  std::vector<int> out;
  for (int x : h.elements()) out.push_back(map(x));
  return Subgroup(map.target, std::move(out));
}

Quotient quotient(const Subgroup& normal) {
  if (!normal.is_normal()) throw InvalidInput("quotient by a subgroup that is not normal");
  const auto& g = normal.parent();
  const int n = g->order();
  std::vector<int> coset(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int k : normal.elements()) coset[g->mul(x, k)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a) * m + b] = coset[g->mul(reps[a], reps[b])];
  auto q = make_group(m, std::move(table), g->name() + "/N", false);
  return Quotient{q, GroupMap{g, q, coset}, reps};
}

std::vector<int> small_generating_set(const GroupPtr& group) {
  auto gens = group->generators();
  const int n = group->order();
  std::vector<int> mark(static_cast<std::size_t>(n), 0), queue;
  int stamp = 0;
  for (std::size_t i = 0; i < gens.size() && gens.size() > 1;) {
    std::vector<int> rest = gens;
    rest.erase(rest.begin() + static_cast<long>(i));
    if (closure_size(*group, rest, mark, ++stamp, queue) == n)
      gens = std::move(rest);
    else
      ++i;
  }
  if (gens.size() <= 2 || n > 1100) return gens;
  std::vector<int> by_order(static_cast<std::size_t>(n));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return group->element_order(a) > group->element_order(b); });
  long attempts = 0;
  for (int a : by_order) {
    for (int b : by_order) {
      if (b == a || b == 0) continue;
      if (++attempts > 40000) return gens;
      int pair[2] = {a, b};
      if (closure_size(*group, pair, mark, ++stamp, queue) == n) return {a, b};
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> centralizer_orders(const FiniteGroup& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()), 0);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++out[a];
  return out;
}

// Enumerates bijective homomorphisms source -> target by backtracking on the
// images of a generating set of the source.
std::vector<GroupMap> search_isomorphisms(const GroupPtr& source, const GroupPtr& target, std::size_t limit) {
  std::vector<GroupMap> out;
  const int n = source->order();
  if (n != target->order()) return out;
  const auto gens = small_generating_set(source);
  const std::size_t k = gens.size();

  // Words over `gens` for every source element (BFS tree).
  std::vector<int> parent(static_cast<std::size_t>(n), -1), via(static_cast<std::size_t>(n), -1), order_list{0};
  parent[0] = 0;
  for (std::size_t h = 0; h < order_list.size(); ++h) {
    const int x = order_list[h];
    for (std::size_t j = 0; j < k; ++j) {
      const int y = source->mul(x, gens[j]);
      if (parent[y] < 0) {
        parent[y] = x;
        via[y] = static_cast<int>(j);
        order_list.push_back(y);
      }
    }
  }

  const auto cs = centralizer_orders(*source);
  const auto ct = centralizer_orders(*target);
  std::vector<std::vector<int>> candidates(k);
  for (std::size_t j = 0; j < k; ++j)
    for (int y = 0; y < n; ++y)
      if (target->element_order(y) == source->element_order(gens[j]) && ct[y] == cs[gens[j]])
        candidates[j].push_back(y);

  std::vector<int> choice(k), img(static_cast<std::size_t>(n));
  std::vector<char> hit(static_cast<std::size_t>(n));
  auto try_complete = [&]() -> bool {
    img[0] = 0;
    for (std::size_t h = 1; h < order_list.size(); ++h) {
      const int y = order_list[h];
      img[y] = target->mul(img[parent[y]], choice[via[y]]);
    }
    for (int x = 0; x < n; ++x)
      for (std::size_t j = 0; j < k; ++j)
        if (img[source->mul(x, gens[j])] != target->mul(img[x], choice[j])) return false;
    std::fill(hit.begin(), hit.end(), 0);
    for (int x = 0; x < n; ++x) {
      if (hit[img[x]]) return false;
      hit[img[x]] = 1;
    }
    return true;
  };

  // Partial check: relations among the first `depth` generators that are
  // already visible as commutation/power relations.
  auto consistent = [&](std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i) {
      const bool src = source->mul(gens[i], gens[depth]) == source->mul(gens[depth], gens[i]);
      const bool tgt = target->mul(choice[i], choice[depth]) == target->mul(choice[depth], choice[i]);
      if (src != tgt) return false;
      if (choice[i] == choice[depth]) return false;
    }
    return true;
  };

  std::vector<std::size_t> pos(k, 0);
  std::size_t depth = 0;
  if (k == 0) {
    out.push_back(GroupMap{source, target, std::vector<int>{0}});
    return out;
  }
  while (true) {
    if (pos[depth] >= candidates[depth].size()) {
      if (depth == 0) break;
      pos[depth] = 0;
      --depth;
      ++pos[depth];
      continue;
    }
    choice[depth] = candidates[depth][pos[depth]];
    if (!consistent(depth)) {
      ++pos[depth];
      continue;
    }
    if (depth + 1 < k) {
      ++depth;
      continue;
    }
    if (try_complete()) {
      out.push_back(GroupMap{source, target, img});
      if (limit != 0 && out.size() >= limit) return out;
    }
    ++pos[depth];
  }
  return out;
}

}  // namespace

std::vector<GroupMap> isomorphisms(const GroupPtr& source, const GroupPtr& target, std::size_t limit) {
  return search_isomorphisms(source, target, limit);
}

Automorphisms automorphism_group(const GroupPtr& group) {
  if (group->order() > caps().analysis_order)
    throw CapExceeded("automorphism search limited to order " + std::to_string(caps().analysis_order));
  Automorphisms out;
  out.all = search_isomorphisms(group, group, 0);
  std::sort(out.all.begin(), out.all.end(),
            [](const GroupMap& a, const GroupMap& b) { return a.images < b.images; });
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < out.all.size(); ++i) index[out.all[i].images] = static_cast<int>(i);
  std::set<std::vector<int>> inner_seen;
  for (int g = 0; g < group->order(); ++g) {
    auto c = inner_automorphism(group, g);
    if (inner_seen.insert(c.images).second) out.inner.push_back(std::move(c));
  }
  std::sort(out.inner.begin(), out.inner.end(),
            [](const GroupMap& a, const GroupMap& b) { return a.images < b.images; });
  out.outer_class.assign(out.all.size(), -1);
  for (std::size_t i = 0; i < out.all.size(); ++i) {
    if (out.outer_class[i] >= 0) continue;
    const int cls = static_cast<int>(out.outer.size());
    out.outer.push_back(out.all[i]);
    for (const auto& c : out.inner) {
      auto it = index.find(compose(out.all[i], c).images);
      if (it == index.end()) throw ConsistencyError("automorphism set not closed under inner composition");
      out.outer_class[it->second] = cls;
    }
  }
  out.identity_index = 0;
  return out;
}

std::vector<int> order_profile(const GroupPtr& group) {
  std::vector<int> out;
  for (int x = 0; x < group->order(); ++x) out.push_back(group->element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

int involution_count(const GroupPtr& group) {
  int c = 0;
  for (int x = 0; x < group->order(); ++x)
    if (group->mul(x, x) == 0) ++c;
  return c;
}

std::optional<GroupMap> is_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order() || a->is_abelian() != b->is_abelian()) return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  if (center(a).order() != center(b).order()) return std::nullopt;
  if (derived_subgroup(a).order() != derived_subgroup(b).order()) return std::nullopt;
  auto found = search_isomorphisms(a, b, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

}  // namespace brpic
