#pragma once

#include "sextic/upoly.hpp"

#include <utility>
#include <vector>

namespace sextic {

namespace detail {

template <class R>
R ring_power(const R& x, int e) {
  R r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace detail

/// Determinant over an integral domain by Bareiss fraction-free elimination.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  int sign = 1;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return R(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  R d = m[n - 1][n - 1];
  return sign < 0 ? R(-d) : d;
}

/// Resultant as the determinant of the Sylvester matrix.
template <class R>
R sylvester_resultant(const UPoly<R>& a, const UPoly<R>& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return R(0);
  const int m = a.degree();
  const int n = b.degree();
  const int size = m + n;
  if (size == 0) return R(1);
  std::vector<std::vector<R>> s(static_cast<std::size_t>(size),
                                std::vector<R>(static_cast<std::size_t>(size), R(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = b.coeff(n - j);
  return bareiss_determinant(std::move(s));
}

/// Resultant by the subresultant pseudo-remainder sequence. Works over any
/// integral domain R with exact division, including R = UPoly<F>. Uses the
/// normalization Res(a, b) = lc(a)^deg(b) * prod b(roots of a).
template <class R>
R subresultant_resultant(UPoly<R> a, UPoly<R> b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return R(0);
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -1;
  }
  if (b.degree() == 0) {
    R r = detail::ring_power(b.lc(), a.degree());
    return sign < 0 ? R(-r) : r;
  }
  R g(1);
  R h(1);
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    const int delta = da - db;
    if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
    UPoly<R> r = prem(a, b);
    a = std::move(b);
    if (r.is_zero_poly()) return R(0);
    b = exact_div(r, R(g * detail::ring_power(h, delta)));
    g = a.lc();
    if (delta != 0) h = exact_div(R(detail::ring_power(g, delta)), R(detail::ring_power(h, delta - 1)));
    if (b.degree() == 0) break;
  }
  const int da = a.degree();
  R res = exact_div(R(detail::ring_power(b.lc(), da)), R(detail::ring_power(h, da - 1)));
  return sign < 0 ? R(-res) : res;
}

/// Resultant with respect to the polynomial variable. Small inputs (total
/// degree at most 4) go through the Sylvester determinant.
template <class R>
R resultant(const UPoly<R>& a, const UPoly<R>& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) throw DegenerateInput("resultant of a zero polynomial");
  if (a.degree() + b.degree() <= 4) return sylvester_resultant(a, b);
  return subresultant_resultant(a, b);
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f); zero iff f has a repeated root.
template <class R>
R discriminant(const UPoly<R>& f) {
  if (f.degree() < 1) throw DegenerateInput("discriminant needs degree >= 1");
  const int n = f.degree();
  if (n == 1) return R(1);
  R r = exact_div(subresultant_resultant(f, f.derivative()), f.lc());
  return ((n * (n - 1) / 2) % 2 == 1) ? R(-r) : r;
}

}  // namespace sextic
