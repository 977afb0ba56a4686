#pragma once

#include <cstdint>
#include <vector>

namespace brpic {

using i64 = std::int64_t;
using Matrix = std::vector<std::vector<i64>>;

i64 mod_pos(i64 a, i64 m) noexcept;
i64 gcd64(i64 a, i64 b) noexcept;
/// Inverse of a unit modulo m.
i64 inverse_mod(i64 a, i64 m);
/// Prime divisors in increasing order.
std::vector<i64> prime_divisors(i64 n);
/// Exponent of p in n (n > 0).
int valuation(i64 n, i64 p);
i64 ipow(i64 b, int e);

/// Smith form over the local ring Z/p^E.
///
/// Row operations are applied in place; column operations are recorded in
/// C and Cinv, so that U A C is diagonal with entries p^val[k] in the first
/// `rank` positions. Columns of `a` past `cols` ride along with the row
/// operations (right-hand sides) and never pivot.
struct LocalSmith {
  i64 p = 2;
  int E = 1;
  i64 modulus = 2;
  int cols = 0;
  int rank = 0;
  std::vector<int> val;  // pivot valuations, val[k] < E
  Matrix C;              // cols x cols
  Matrix Cinv;
  Matrix reduced;        // U A, with pivot rows first
};

LocalSmith local_smith(Matrix a, int cols, i64 p, int E);

/// Kernel of A over Z/p^E, as generators with their orders.
struct LocalKernel {
  std::vector<std::vector<i64>> generators;
  std::vector<i64> orders;
  /// For a kernel element u: its coordinates on `generators`.
  std::vector<i64> coordinates(const std::vector<i64>& u) const;

  LocalSmith smith;
  std::vector<int> source;  // generator i is column source[i] of C
  std::vector<int> shift;   // generator i is p^shift[i] * C[:, source[i]]
};

LocalKernel local_kernel(const Matrix& a, int cols, i64 p, int E);

/// (Z/o_1 + ... + Z/o_r) / <relations>, in invariant-factor form.
class AbelianQuotient {
 public:
  AbelianQuotient() = default;
  AbelianQuotient(std::vector<i64> orders, const Matrix& relations);

  const std::vector<i64>& ambient() const noexcept { return orders_; }
  /// d_1 | d_2 | ... with every d_i > 1.
  const std::vector<i64>& factors() const noexcept { return factors_; }
  i64 order() const noexcept;
  std::vector<i64> coordinates(const std::vector<i64>& x) const;
  /// Ambient vector of the j-th basis element (order exactly factors()[j]).
  std::vector<i64> lift(std::size_t j) const;
  /// Ambient vector with the given coordinates.
  std::vector<i64> lift(const std::vector<i64>& coords) const;

 private:
  struct Local {
    i64 p;
    int F;
    std::vector<int> column;  // local basis element -> column of C
    std::vector<int> exp;     // its order is p^exp
    Matrix C;
    Matrix Cinv;
  };
  std::vector<i64> orders_;
  std::vector<i64> factors_;
  std::vector<Local> locals_;
  // slot[j][l] = index into locals_[l].column feeding factor j, or -1
  std::vector<std::vector<int>> slot_;
};

/// Z / B with Z = {u : rows . u = 0} and B spanned by `boundaries`.
///
/// Unknown j lives in Z/unknown_moduli[j]; row i is an equation modulo
/// row_moduli[i]. Every boundary must lie in Z. Solved one prime at a time
/// over Z/p^E and reassembled.
class LinearSubquotient {
 public:
  LinearSubquotient() = default;
  LinearSubquotient(std::vector<i64> unknown_moduli, const Matrix& rows, const std::vector<i64>& row_moduli,
                    const Matrix& boundaries);

  const std::vector<i64>& factors() const noexcept { return total_.factors(); }
  i64 order() const noexcept { return total_.order(); }
  /// Coordinates of a solution u (throws ConsistencyError if u is not one).
  std::vector<i64> coordinates(const std::vector<i64>& u) const;
  /// A solution with the given coordinates.
  std::vector<i64> lift(const std::vector<i64>& coords) const;
  /// Generators of Z (before dividing by B), as vectors over unknown_moduli.
  std::vector<std::vector<i64>> kernel_generators() const;

 private:
  struct Prime {
    i64 p;
    int E;
    std::vector<int> a;  // valuation of each unknown modulus
    LocalKernel kernel;
    AbelianQuotient quotient;
  };
  std::vector<i64> local_part(const Prime& pr, const std::vector<i64>& u) const;
  std::vector<i64> moduli_;
  std::vector<Prime> primes_;
  AbelianQuotient total_;
};

/// Some x with rows . x = rhs (row i modulo row_moduli[i], x_j modulo
/// unknown_moduli[j]), or an empty vector when there is none.
std::vector<i64> solve_linear(const std::vector<i64>& unknown_moduli, const Matrix& rows,
                              const std::vector<i64>& row_moduli, const std::vector<i64>& rhs, bool* ok);

/// x in Z/m with x = v mod p^a and x = 0 mod m/p^a (p^a the p-part of m).
i64 embed_primary(i64 v, i64 m, i64 p);

/// Enumerates all coordinate vectors of a finite abelian group in
/// lexicographic order; calls f(coords) for each.
template <class Fn>
void for_each_element(const std::vector<i64>& factors, Fn&& f) {
  std::vector<i64> c(factors.size(), 0);
  while (true) {
    f(static_cast<const std::vector<i64>&>(c));
    std::size_t i = c.size();
    while (true) {
      if (i == 0) return;
      --i;
      if (++c[i] < factors[i]) break;
      c[i] = 0;
    }
  }
}

}  // namespace brpic
