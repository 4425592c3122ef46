#pragma once

#include "sextic/errors.hpp"

#include <concepts>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sextic {

/// Dense univariate polynomial over a commutative ring R, lowest degree first.
///
/// R may itself be a UPoly, which is how bivariate polynomials are handled by the
/// resultant code. The leading coefficient is nonzero unless the polynomial is zero.
template <class R>
class UPoly {
 public:
  using Coeff = R;

  UPoly() = default;
  UPoly(const R& c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(c)) c_.push_back(c);
  }
  template <std::integral I>
  UPoly(I n) : UPoly(R(n)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(const R& coeff, int degree) {
    if (is_zero(coeff)) return {};
    std::vector<R> c(static_cast<std::size_t>(degree) + 1, R(0));
    c.back() = coeff;
    return UPoly(std::move(c));
  }
  static UPoly variable() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const R& lc() const { return c_.back(); }
  R coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : R(0);
  }
  const std::vector<R>& coeffs() const { return c_; }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly& operator*=(const R& s) {
    if (is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(UPoly a, const R& s) { return a *= s; }
  friend UPoly operator*(const R& s, UPoly a) { return a *= s; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Multiplies by t^k.
  UPoly shifted(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<R> r(static_cast<std::size_t>(k), R(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(R(static_cast<long>(i)) * c_[i]);
    return UPoly(std::move(r));
  }

  template <class X>
  X eval(const X& x) const {
    X acc = X(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + X(c_[i]);
    return acc;
  }

  /// p(q(t)).
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + UPoly(c_[i]);
    return acc;
  }

  std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")";
      if (i > 0) os << "*" << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const UPoly<R>& p) {
  return p.is_zero_poly();
}

template <class R>
UPoly<R> conj(const UPoly<R>& p) {
  std::vector<R> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(conj(x));
  return UPoly<R>(std::move(c));
}

/// Division with remainder, dividing coefficients exactly. Over a field this is
/// ordinary division; over a ring it requires each quotient coefficient to exist.
template <class R>
std::pair<UPoly<R>, UPoly<R>> divmod(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero_poly()) throw ArithmeticError("polynomial division by zero");
  std::vector<R> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {UPoly<R>(), a};
  std::vector<R> q(static_cast<std::size_t>(da - db + 1), R(0));
  const R& lb = b.lc();
  for (int k = da; k >= db; --k) {
    R& top = rem[static_cast<std::size_t>(k)];
    if (is_zero(top)) continue;
    R f = exact_div(top, lb);
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly<R>(std::move(q)), UPoly<R>(std::move(rem))};
}

template <class R>
UPoly<R> rem(const UPoly<R>& a, const UPoly<R>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws ArithmeticError if b does not divide a.
template <class R>
UPoly<R> exact_div(const UPoly<R>& a, const UPoly<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero_poly()) throw ArithmeticError("inexact polynomial division");
  return q;
}

template <class R>
UPoly<R> exact_div(const UPoly<R>& a, const R& s) {
  std::vector<R> c;
  c.reserve(a.coeffs().size());
  for (const auto& x : a.coeffs()) c.push_back(exact_div(x, s));
  return UPoly<R>(std::move(c));
}

/// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b, using
/// only ring operations.
template <class R>
UPoly<R> prem(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero_poly()) throw ArithmeticError("pseudo-division by zero");
  int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<R> r = a.coeffs();
  const R& lb = b.lc();
  int steps = a.degree() - db + 1;
  int top = a.degree();
  for (int s = 0; s < steps; ++s, --top) {
    R t = r[static_cast<std::size_t>(top)];
    for (auto& x : r) x *= lb;
    if (!is_zero(t)) {
      for (int j = 0; j <= db; ++j)
        r[static_cast<std::size_t>(top - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.pop_back();
  }
  return UPoly<R>(std::move(r));
}

/// Monic normalization over a field (zero stays zero).
template <class F>
UPoly<F> monic(const UPoly<F>& p) {
  if (p.is_zero_poly() || p.lc() == F(1)) return p;
  return p * (F(1) / p.lc());
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero_poly()) {
    UPoly<F> r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
struct XGcd {
  UPoly<F> g, s, t;
};

template <class F>
XGcd<F> xgcd(UPoly<F> a, UPoly<F> b) {
  UPoly<F> s0(F(1)), s1, t0, t1(F(1));
  while (!b.is_zero_poly()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    UPoly<F> s2 = s0 - q * s1;
    UPoly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero_poly()) return {a, s0, t0};
  F inv = F(1) / a.lc();
  return {a * inv, s0 * inv, t0 * inv};
}

/// Squarefree part f / gcd(f, f') (monic); characteristic zero or large p.
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& f) {
  if (f.degree() <= 0) return monic(f);
  UPoly<F> g = gcd(f, f.derivative());
  return monic(exact_div(f, g));
}

template <class F>
bool is_squarefree(const UPoly<F>& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

template <class F>
UPoly<F> power(const UPoly<F>& p, int e) {
  UPoly<F> r(F(1));
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

}  // namespace sextic
