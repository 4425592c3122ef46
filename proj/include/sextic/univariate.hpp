#pragma once

#include "sextic/rational.hpp"
#include "sextic/upoly.hpp"

#include <optional>

namespace sextic {

using QPoly = UPoly<Rational>;

/// Integer-coefficient primitive associate with the same sign of every coefficient.
QPoly primitive_part(const QPoly& f);

/// Squarefreeness over Q, decided modulo a prime not dividing the leading
/// coefficient when that image is squarefree (then so is f), exactly otherwise.
bool is_squarefree_q(const QPoly& f);

/// Number of distinct real roots of a squarefree rational polynomial, read from
/// sign variations of the Sturm sequence at -inf and +inf. Throws NotSquarefree.
int sturm_count(const QPoly& f);

/// Real roots of a binary form given by its dehomogenization f(s) = F(s, 1) and
/// its formal degree. Missing top degrees are roots at infinity, which are real.
/// The form must be squarefree (at most a simple root at infinity).
int binary_form_real_roots(const QPoly& f, int formal_degree);

/// Square-root extraction by coefficient matching. For f of even degree 2k,
/// returns the monic g of degree k with g^2 = f / lc(f), or nullopt.
template <class F>
std::optional<UPoly<F>> perfect_square_root(const UPoly<F>& f) {
  if (f.is_zero_poly() || f.degree() % 2 != 0) return std::nullopt;
  const int n = f.degree();
  const int k = n / 2;
  UPoly<F> m = monic(f);
  // g = t^k + b_{k-1} t^{k-1} + ... + b_0; solve from the top coefficients down.
  std::vector<F> b(static_cast<std::size_t>(k) + 1, F(0));
  b[static_cast<std::size_t>(k)] = F(1);
  const F two_inv = F(1) / F(2);
  for (int j = k - 1; j >= 0; --j) {
    // [t^(k+j)] g^2 = 2 b_j + sum of b_a b_c over a + c = k + j with j < a, c < k.
    F acc = m.coeff(k + j);
    for (int a = j + 1; a <= k; ++a) {
      int c = k + j - a;
      if (c <= j || c > k) continue;
      acc -= b[static_cast<std::size_t>(a)] * b[static_cast<std::size_t>(c)];
    }
    b[static_cast<std::size_t>(j)] = acc * two_inv;
  }
  UPoly<F> g(b);
  if (!(g * g == m)) return std::nullopt;
  return g;
}

}  // namespace sextic
