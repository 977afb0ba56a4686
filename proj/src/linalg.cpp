#include "brpic/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "brpic/error.hpp"

namespace brpic {

i64 mod_pos(i64 a, i64 m) noexcept {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 gcd64(i64 a, i64 b) noexcept { return std::gcd(a, b); }

i64 inverse_mod(i64 a, i64 m) {
  if (m == 1) return 0;
  i64 old_r = mod_pos(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw ConsistencyError("inverse of a non-unit requested");
  return mod_pos(old_s, m);
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

int valuation(i64 n, i64 p) {
  if (n == 0) return 1 << 20;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

LocalSmith local_smith(Matrix a, int cols, i64 p, int E) {
  LocalSmith s;
  s.p = p;
  s.E = E;
  s.modulus = ipow(p, E);
  s.cols = cols;
  const i64 mod = s.modulus;
  const int rows = static_cast<int>(a.size());
  for (auto& row : a)
    for (auto& v : row) v = mod_pos(v, mod);
  s.C.assign(static_cast<std::size_t>(cols), std::vector<i64>(static_cast<std::size_t>(cols), 0));
  s.Cinv = s.C;
  for (int i = 0; i < cols; ++i) s.C[i][i] = s.Cinv[i][i] = 1;

  int k = 0;
  while (k < rows && k < cols) {
    int bi = -1, bj = -1, bv = E;
    for (int i = k; i < rows && bv > 0; ++i)
      for (int j = k; j < cols; ++j) {
        const i64 v = a[i][j];
        if (v == 0) continue;
        const int val = v % p != 0 ? 0 : valuation(v, p);
        if (val < bv) {
          bv = val;
          bi = i;
          bj = j;
          if (val == 0) break;
        }
      }
    if (bi < 0) break;
    std::swap(a[k], a[bi]);
    if (bj != k) {
      for (auto& row : a) std::swap(row[k], row[bj]);
      for (auto& row : s.C) std::swap(row[k], row[bj]);
      std::swap(s.Cinv[k], s.Cinv[bj]);
    }
    const i64 pv = ipow(p, bv);
    const i64 unit_inv = inverse_mod(a[k][k] / pv, mod);
    for (auto& v : a[k]) v = v * unit_inv % mod;

    const auto& pivot_row = a[k];
    const std::size_t width = pivot_row.size();
    for (int i = 0; i < rows; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const i64 f = a[i][k] / pv;
      auto& row = a[i];
      for (std::size_t j = static_cast<std::size_t>(k); j < width; ++j)
        if (pivot_row[j] != 0) row[j] = mod_pos(row[j] - f * pivot_row[j], mod);
    }
    for (int j = k + 1; j < cols; ++j) {
      if (a[k][j] == 0) continue;
      const i64 f = a[k][j] / pv;
      a[k][j] = 0;
      for (int r = 0; r < cols; ++r)
        if (s.C[r][k] != 0) s.C[r][j] = mod_pos(s.C[r][j] - f * s.C[r][k], mod);
      auto& inv_k = s.Cinv[k];
      const auto& inv_j = s.Cinv[j];
      for (int c = 0; c < cols; ++c)
        if (inv_j[c] != 0) inv_k[c] = (inv_k[c] + f * inv_j[c]) % mod;
    }
    s.val.push_back(bv);
    ++k;
  }
  s.rank = k;
  s.reduced = std::move(a);
  return s;
}

LocalKernel local_kernel(const Matrix& a, int cols, i64 p, int E) {
  LocalKernel out;
  out.smith = local_smith(a, cols, p, E);
  const auto& s = out.smith;
  for (int k = 0; k < cols; ++k) {
    const int v = k < s.rank ? s.val[k] : E;
    if (v == 0) continue;
    const int shift = E - v;
    const i64 scale = ipow(p, shift);
    std::vector<i64> g(static_cast<std::size_t>(cols));
    for (int r = 0; r < cols; ++r) g[r] = s.C[r][k] * scale % s.modulus;
    out.generators.push_back(std::move(g));
    out.orders.push_back(ipow(p, v));
    out.source.push_back(k);
    out.shift.push_back(shift);
  }
  return out;
}

std::vector<i64> LocalKernel::coordinates(const std::vector<i64>& u) const {
  const i64 mod = smith.modulus;
  std::vector<i64> out(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& row = smith.Cinv[source[i]];
    i64 w = 0;
    for (std::size_t c = 0; c < u.size(); ++c)
      if (row[c] != 0) w = (w + row[c] * mod_pos(u[c], mod)) % mod;
    const i64 scale = ipow(smith.p, shift[i]);
    if (w % scale != 0) throw ConsistencyError("vector is not in the kernel");
    out[i] = (w / scale) % orders[i];
  }
  // Pivot columns with valuation 0 must vanish for a kernel element.
  for (int k = 0; k < smith.rank; ++k) {
    if (smith.val[k] != 0) continue;
    i64 w = 0;
    for (std::size_t c = 0; c < u.size(); ++c) w = (w + smith.Cinv[k][c] * mod_pos(u[c], mod)) % mod;
    if (w != 0) throw ConsistencyError("vector is not in the kernel");
  }
  return out;
}

// ---------------------------------------------------------------------------

AbelianQuotient::AbelianQuotient(std::vector<i64> orders, const Matrix& relations) : orders_(std::move(orders)) {
  const int r = static_cast<int>(orders_.size());
  i64 l = 1;
  for (i64 o : orders_) {
    if (o < 1) throw InvalidInput("ambient orders must be positive");
    l = std::lcm(l, o);
  }
  for (i64 p : prime_divisors(l)) {
    std::vector<int> e(static_cast<std::size_t>(r));
    int F = 0;
    for (int i = 0; i < r; ++i) {
      e[i] = valuation(orders_[i], p);
      F = std::max(F, e[i]);
    }
    Matrix m;
    for (const auto& rel : relations) {
      std::vector<i64> row(static_cast<std::size_t>(r));
      bool nonzero = false;
      for (int i = 0; i < r; ++i) {
        row[i] = mod_pos(rel[i], ipow(p, e[i]));
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) m.push_back(std::move(row));
    }
    for (int i = 0; i < r; ++i)
      if (e[i] < F) {
        std::vector<i64> row(static_cast<std::size_t>(r), 0);
        row[i] = ipow(p, e[i]);
        m.push_back(std::move(row));
      }
    auto s = local_smith(std::move(m), r, p, F);
    Local loc{p, F, {}, {}, std::move(s.C), std::move(s.Cinv)};
    std::vector<std::pair<int, int>> basis;  // (exp, column)
    for (int k = 0; k < r; ++k) {
      const int v = k < s.rank ? s.val[k] : F;
      if (v > 0) basis.emplace_back(v, k);
    }
    std::stable_sort(basis.begin(), basis.end());
    for (auto [v, k] : basis) {
      loc.exp.push_back(v);
      loc.column.push_back(k);
    }
    if (!loc.exp.empty()) locals_.push_back(std::move(loc));
  }
  std::size_t count = 0;
  for (const auto& loc : locals_) count = std::max(count, loc.exp.size());
  factors_.assign(count, 1);
  slot_.assign(count, std::vector<int>(locals_.size(), -1));
  for (std::size_t l = 0; l < locals_.size(); ++l) {
    const auto& loc = locals_[l];
    const std::size_t offset = count - loc.exp.size();
    for (std::size_t s = 0; s < loc.exp.size(); ++s) {
      factors_[offset + s] *= ipow(loc.p, loc.exp[s]);
      slot_[offset + s][l] = static_cast<int>(s);
    }
  }
}

i64 AbelianQuotient::order() const noexcept {
  i64 o = 1;
  for (i64 d : factors_) o *= d;
  return o;
}

std::vector<i64> AbelianQuotient::coordinates(const std::vector<i64>& x) const {
  std::vector<i64> out(factors_.size(), 0);
  std::vector<i64> modulus(factors_.size(), 1);
  for (std::size_t l = 0; l < locals_.size(); ++l) {
    const auto& loc = locals_[l];
    const i64 mod = ipow(loc.p, loc.F);
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      const int s = slot_[j][l];
      if (s < 0) continue;
      const int k = loc.column[s];
      i64 y = 0;
      for (std::size_t i = 0; i < orders_.size(); ++i) {
        const i64 pe = ipow(loc.p, valuation(orders_[i], loc.p));
        if (pe == 1) continue;
        y = (y + mod_pos(x[i], pe) * loc.C[i][k]) % mod;
      }
      const i64 pe = ipow(loc.p, loc.exp[s]);
      y %= pe;
      // CRT with what is already known modulo modulus[j].
      const i64 m = modulus[j];
      const i64 t = mod_pos((y - out[j]) % pe * inverse_mod(m % pe, pe), pe);
      out[j] = out[j] + m * t;
      modulus[j] = m * pe;
    }
  }
  return out;
}

std::vector<i64> AbelianQuotient::lift(std::size_t j) const {
  std::vector<i64> out(orders_.size(), 0);
  for (std::size_t l = 0; l < locals_.size(); ++l) {
    const int s = slot_[j][l];
    if (s < 0) continue;
    const auto& loc = locals_[l];
    const auto& row = loc.Cinv[loc.column[s]];
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      const i64 o = orders_[i];
      const i64 pe = ipow(loc.p, valuation(o, loc.p));
      if (pe == 1) continue;
      const i64 rest = o / pe;
      const i64 idem = rest * inverse_mod(rest % pe, pe) % o;
      out[i] = (out[i] + mod_pos(row[i], pe) * idem) % o;
    }
  }
  return out;
}

std::vector<i64> AbelianQuotient::lift(const std::vector<i64>& coords) const {
  std::vector<i64> out(orders_.size(), 0);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] == 0) continue;
    const auto b = lift(j);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (out[i] + mod_pos(coords[j], orders_[i]) * b[i]) % orders_[i];
  }
  return out;
}

}  // namespace brpic

namespace brpic {

i64 embed_primary(i64 v, i64 m, i64 p) {
  const i64 pe = ipow(p, valuation(m, p));
  if (pe == 1) return 0;
  const i64 rest = m / pe;
  const i64 idem = rest * inverse_mod(rest % pe, pe) % m;
  return mod_pos(v, pe) * idem % m;
}

namespace {

i64 lcm_all(const std::vector<i64>& a, const std::vector<i64>& b) {
  i64 l = 1;
  for (i64 v : a) l = std::lcm(l, v);
  for (i64 v : b) l = std::lcm(l, v);
  return l;
}

// Rows reduced to the p-primary part and rescaled into Z/p^E.
Matrix scaled_rows(const Matrix& rows, const std::vector<i64>& row_moduli, const std::vector<i64>* rhs, i64 p, int E,
                   std::size_t cols) {
  const i64 pE = ipow(p, E);
  Matrix out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int b = valuation(row_moduli[i], p);
    if (b == 0) continue;
    const i64 pb = ipow(p, b), scale = ipow(p, E - b);
    std::vector<i64> row(cols + (rhs ? 1 : 0));
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = mod_pos(rows[i][j], pb) * scale % pE;
      nonzero = nonzero || row[j] != 0;
    }
    if (rhs) {
      row[cols] = mod_pos((*rhs)[i], pb) * scale % pE;
      nonzero = nonzero || row[cols] != 0;
    }
    if (nonzero) out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

LinearSubquotient::LinearSubquotient(std::vector<i64> unknown_moduli, const Matrix& rows,
                                     const std::vector<i64>& row_moduli, const Matrix& boundaries)
    : moduli_(std::move(unknown_moduli)) {
  const std::size_t cols = moduli_.size();
  std::vector<i64> ambient;
  for (i64 p : prime_divisors(lcm_all(moduli_, row_moduli))) {
    Prime pr{p, 0, std::vector<int>(cols), {}, {}};
    int amax = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      pr.a[j] = valuation(moduli_[j], p);
      amax = std::max(amax, pr.a[j]);
    }
    if (amax == 0) continue;
    pr.E = amax;
    for (i64 m : row_moduli) pr.E = std::max(pr.E, valuation(m, p));
    pr.kernel = local_kernel(scaled_rows(rows, row_moduli, nullptr, p, pr.E, cols), static_cast<int>(cols), p, pr.E);
    Matrix rels;
    for (std::size_t j = 0; j < cols; ++j)
      if (pr.a[j] < pr.E) {
        std::vector<i64> e(cols, 0);
        e[j] = ipow(p, pr.a[j]);
        rels.push_back(pr.kernel.coordinates(e));
      }
    for (const auto& b : boundaries) rels.push_back(pr.kernel.coordinates(local_part(pr, b)));
    pr.quotient = AbelianQuotient(pr.kernel.orders, rels);
    for (i64 d : pr.quotient.factors()) ambient.push_back(d);
    primes_.push_back(std::move(pr));
  }
  total_ = AbelianQuotient(ambient, {});
}

std::vector<i64> LinearSubquotient::local_part(const Prime& pr, const std::vector<i64>& u) const {
  std::vector<i64> out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = mod_pos(u[j], ipow(pr.p, pr.a[j]));
  return out;
}

std::vector<i64> LinearSubquotient::coordinates(const std::vector<i64>& u) const {
  std::vector<i64> ambient;
  for (const auto& pr : primes_)
    for (i64 c : pr.quotient.coordinates(pr.kernel.coordinates(local_part(pr, u)))) ambient.push_back(c);
  return total_.coordinates(ambient);
}

std::vector<i64> LinearSubquotient::lift(const std::vector<i64>& coords) const {
  const auto ambient = total_.lift(coords);
  std::vector<i64> out(moduli_.size(), 0);
  std::size_t offset = 0;
  for (const auto& pr : primes_) {
    const std::size_t cnt = pr.quotient.factors().size();
    std::vector<i64> chunk(ambient.begin() + static_cast<long>(offset), ambient.begin() + static_cast<long>(offset + cnt));
    offset += cnt;
    const auto kc = pr.quotient.lift(chunk);
    const i64 pE = ipow(pr.p, pr.E);
    std::vector<i64> x(moduli_.size(), 0);
    for (std::size_t i = 0; i < kc.size(); ++i) {
      if (kc[i] == 0) continue;
      const auto& g = pr.kernel.generators[i];
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = (x[j] + kc[i] * g[j]) % pE;
    }
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = (out[j] + embed_primary(x[j], moduli_[j], pr.p)) % moduli_[j];
  }
  return out;
}

std::vector<std::vector<i64>> LinearSubquotient::kernel_generators() const {
  std::vector<std::vector<i64>> out;
  for (const auto& pr : primes_)
    for (const auto& g : pr.kernel.generators) {
      std::vector<i64> v(moduli_.size());
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = embed_primary(g[j], moduli_[j], pr.p);
      out.push_back(std::move(v));
    }
  return out;
}

std::vector<i64> solve_linear(const std::vector<i64>& unknown_moduli, const Matrix& rows,
                              const std::vector<i64>& row_moduli, const std::vector<i64>& rhs, bool* ok) {
  const std::size_t cols = unknown_moduli.size();
  std::vector<i64> out(cols, 0);
  *ok = true;
  for (i64 p : prime_divisors(lcm_all(unknown_moduli, row_moduli))) {
    int E = 0;
    for (i64 m : unknown_moduli) E = std::max(E, valuation(m, p));
    for (i64 m : row_moduli) E = std::max(E, valuation(m, p));
    auto s = local_smith(scaled_rows(rows, row_moduli, &rhs, p, E, cols), static_cast<int>(cols), p, E);
    std::vector<i64> w(cols, 0);
    for (std::size_t i = 0; i < s.reduced.size(); ++i) {
      const i64 r = s.reduced[i][cols];
      if (static_cast<int>(i) < s.rank) {
        const i64 pv = ipow(p, s.val[i]);
        if (r % pv != 0) {
          *ok = false;
          return {};
        }
        w[i] = r / pv;
      } else if (r != 0) {
        *ok = false;
        return {};
      }
    }
    for (std::size_t j = 0; j < cols; ++j) {
      i64 x = 0;
      for (std::size_t k = 0; k < cols; ++k)
        if (w[k] != 0) x = (x + s.C[j][k] * w[k]) % s.modulus;
      out[j] = (out[j] + embed_primary(x, unknown_moduli[j], p)) % unknown_moduli[j];
    }
  }
  return out;
}

}  // namespace brpic
