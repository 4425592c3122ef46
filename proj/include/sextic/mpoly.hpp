#pragma once

#include "sextic/errors.hpp"
#include "sextic/monomial.hpp"
#include "sextic/rational.hpp"
#include "sextic/upoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace sextic {

/// Ordered variable names together with the term order used for leading terms.
struct Ring {
  std::vector<std::string> names;
  MonomialOrder order;

  int nvars() const { return static_cast<int>(names.size()); }
  int index(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
      if (names[static_cast<std::size_t>(i)] == name) return i;
    return -1;
  }
};
using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::degrevlex()) {
  if (names.size() > static_cast<std::size_t>(kMaxVars)) throw ArithmeticError("too many variables");
  return std::make_shared<const Ring>(Ring{std::move(names), order});
}

template <class F>
struct Term {
  Monomial m;
  F c;
};

/// Sparse multivariate polynomial: nonzero terms sorted strictly descending in
/// the ring's term order.
template <class F>
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(RingPtr ring, const F& c) {
    MPoly p(std::move(ring));
    if (!is_zero(c)) p.t_.push_back({Monomial(), c});
    return p;
  }
  static MPoly term(RingPtr ring, Monomial m, const F& c) {
    MPoly p(std::move(ring));
    if (!is_zero(c)) p.t_.push_back({m, c});
    return p;
  }
  static MPoly variable(RingPtr ring, int i) { return term(std::move(ring), Monomial::var(i), F(1)); }

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static MPoly from_terms(RingPtr ring, std::vector<Term<F>> terms) {
    MPoly p(std::move(ring));
    const MonomialOrder& ord = p.ring_->order;
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return ord.compare(a.m, b.m) > 0; });
    for (auto& tm : terms) {
      if (!p.t_.empty() && p.t_.back().m == tm.m) {
        p.t_.back().c += tm.c;
        if (is_zero(p.t_.back().c)) p.t_.pop_back();
      } else if (!is_zero(tm.c)) {
        p.t_.push_back(std::move(tm));
      }
    }
    return p;
  }
  /// Terms already strictly sorted with nonzero coefficients; no checks.
  static MPoly from_sorted(RingPtr ring, std::vector<Term<F>> terms) {
    MPoly p(std::move(ring));
    p.t_ = std::move(terms);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<F>>& terms() const { return t_; }
  std::vector<Term<F>>& mutable_terms() { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero_poly() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }

  const Term<F>& lt() const { return t_.front(); }
  Monomial lm() const { return t_.front().m; }
  const F& lc() const { return t_.front().c; }

  F coeff(Monomial m) const {
    for (const auto& tm : t_)
      if (tm.m == m) return tm.c;
    return F(0);
  }

  int total_degree() const {
    int d = -1;
    for (const auto& tm : t_) d = std::max(d, tm.m.degree());
    return d;
  }
  int degree_in(int var) const {
    int d = is_zero_poly() ? -1 : 0;
    for (const auto& tm : t_) d = std::max(d, tm.m[var]);
    return d;
  }
  bool involves(int var) const {
    for (const auto& tm : t_)
      if (tm.m[var] != 0) return true;
    return false;
  }
  bool is_homogeneous() const {
    for (const auto& tm : t_)
      if (tm.m.degree() != t_.front().m.degree()) return false;
    return true;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& tm : r.t_) tm.c = -tm.c;
    return r;
  }
  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, F(1)); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, F(-1)); }
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }

  friend MPoly operator*(const MPoly& a, const F& s) {
    if (is_zero(s)) return MPoly(a.ring_);
    MPoly r = a;
    for (auto& tm : r.t_) tm.c *= s;
    return r;
  }
  friend MPoly operator*(const F& s, const MPoly& a) { return a * s; }

  /// c * m * this; term orders are multiplicative so the order is preserved.
  MPoly mul_term(Monomial m, const F& c) const {
    MPoly r(ring_);
    if (is_zero(c)) return r;
    r.t_.reserve(t_.size());
    for (const auto& tm : t_) r.t_.push_back({tm.m * m, tm.c * c});
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
    if (a.t_.empty() || b.t_.empty()) return MPoly(ring);
    const MPoly& small = a.t_.size() <= b.t_.size() ? a : b;
    const MPoly& big = a.t_.size() <= b.t_.size() ? b : a;
    if (small.t_.size() == 1) return big.mul_term(small.t_[0].m, small.t_[0].c);
    std::vector<Term<F>> all;
    all.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) all.push_back({x.m * y.m, x.c * y.c});
    return from_terms(ring, std::move(all));
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
    return true;
  }

  MPoly pow(int e) const {
    MPoly r = constant(ring_, F(1));
    MPoly base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return r;
  }

  MPoly derivative(int var) const {
    std::vector<Term<F>> out;
    for (const auto& tm : t_) {
      int e = tm.m[var];
      if (e == 0) continue;
      out.push_back({tm.m.with(var, e - 1), tm.c * F(e)});
    }
    return from_terms(ring_, std::move(out));
  }

  /// Evaluates at a point with coordinates in X (an F-algebra).
  template <class X>
  X eval(const std::vector<X>& point) const {
    const int n = ring_->nvars();
    std::vector<std::vector<X>> powers(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) powers[static_cast<std::size_t>(i)].push_back(X(1));
    X acc = X(0);
    for (const auto& tm : t_) {
      X v = X(tm.c);
      for (int i = 0; i < n; ++i) {
        int e = tm.m[i];
        if (e == 0) continue;
        auto& pw = powers[static_cast<std::size_t>(i)];
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[static_cast<std::size_t>(i)]);
        v *= pw[static_cast<std::size_t>(e)];
      }
      acc += v;
    }
    return acc;
  }

  /// Substitutes polynomials (over a common target ring) for every variable.
  MPoly substitute(const std::vector<MPoly>& images) const {
    RingPtr target = images.at(0).ring();
    const int n = ring_->nvars();
    std::vector<std::vector<MPoly>> powers(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) powers[static_cast<std::size_t>(i)].push_back(constant(target, F(1)));
    std::vector<Term<F>> acc;
    MPoly sum(target);
    for (const auto& tm : t_) {
      MPoly v = constant(target, tm.c);
      for (int i = 0; i < n; ++i) {
        int e = tm.m[i];
        if (e == 0) continue;
        auto& pw = powers[static_cast<std::size_t>(i)];
        while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[static_cast<std::size_t>(i)]);
        v *= pw[static_cast<std::size_t>(e)];
      }
      acc.insert(acc.end(), v.t_.begin(), v.t_.end());
    }
    return from_terms(target, std::move(acc));
  }

  /// Re-expresses in another ring: variable i goes to variable var_map[i].
  MPoly rename(const RingPtr& target, const std::vector<int>& var_map) const {
    std::vector<Term<F>> out;
    out.reserve(t_.size());
    for (const auto& tm : t_) {
      Monomial m;
      for (int i = 0; i < ring_->nvars(); ++i)
        if (tm.m[i] != 0) m = m.with(var_map[static_cast<std::size_t>(i)], tm.m[i]);
      out.push_back({m, tm.c});
    }
    return from_terms(target, std::move(out));
  }
  /// Same variables, different order (or an extended ring with extra trailing variables).
  MPoly in_ring(const RingPtr& target) const {
    std::vector<int> id(static_cast<std::size_t>(ring_->nvars()));
    for (int i = 0; i < ring_->nvars(); ++i) id[static_cast<std::size_t>(i)] = i;
    return rename(target, id);
  }

  template <class G, class Fn>
  MPoly<G> map_coeffs(Fn&& fn) const {
    std::vector<Term<G>> out;
    out.reserve(t_.size());
    for (const auto& tm : t_) {
      G c = fn(tm.c);
      if (!is_zero(c)) out.push_back({tm.m, std::move(c)});
    }
    return MPoly<G>::from_sorted(ring_, std::move(out));
  }

  MPoly monic() const {
    if (t_.empty() || lc() == F(1)) return *this;
    return *this * (F(1) / lc());
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : t_) {
      std::ostringstream cs;
      cs << tm.c;
      std::string c = cs.str();
      bool neg = !c.empty() && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
      if (neg) c = c.substr(1);
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool composite = c.find_first_of("+-", 1) != std::string::npos || c.find('i') != std::string::npos;
      if (composite) c = "(" + c + ")";
      if (tm.m.is_one()) {
        os << c;
      } else {
        if (c != "1") os << c << "*";
        os << tm.m.str(ring_->names);
      }
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

 private:
  static MPoly merge(const MPoly& a, const MPoly& b, const F& sign) {
    const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
    MPoly r(ring);
    if (b.t_.empty()) {
      r.t_ = a.t_;
      return r;
    }
    const MonomialOrder& ord = ring->order;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    const bool negate = !(sign == F(1));
    while (i < a.t_.size() && j < b.t_.size()) {
      int c = ord.compare(a.t_[i].m, b.t_[j].m);
      if (c > 0) {
        r.t_.push_back(a.t_[i++]);
      } else if (c < 0) {
        r.t_.push_back({b.t_[j].m, negate ? -b.t_[j].c : b.t_[j].c});
        ++j;
      } else {
        F s = negate ? a.t_[i].c - b.t_[j].c : a.t_[i].c + b.t_[j].c;
        if (!is_zero(s)) r.t_.push_back({a.t_[i].m, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
    for (; j < b.t_.size(); ++j) r.t_.push_back({b.t_[j].m, negate ? -b.t_[j].c : b.t_[j].c});
    return r;
  }

  RingPtr ring_;
  std::vector<Term<F>> t_;
};

template <class F>
bool is_zero(const MPoly<F>& p) {
  return p.is_zero_poly();
}

/// Multivariate division with remainder by a single divisor.
template <class F>
std::pair<MPoly<F>, MPoly<F>> divmod(const MPoly<F>& a, const MPoly<F>& b) {
  if (b.is_zero_poly()) throw ArithmeticError("multivariate division by zero");
  MPoly<F> q(a.ring()), r(a.ring()), p = a;
  const F inv = F(1) / b.lc();
  std::vector<Term<F>> qt, rt;
  while (!p.is_zero_poly()) {
    const Term<F>& lt = p.lt();
    if (b.lm().divides(lt.m)) {
      Monomial m = lt.m / b.lm();
      F c = lt.c * inv;
      qt.push_back({m, c});
      p = p - b.mul_term(m, c);
    } else {
      rt.push_back(lt);
      p.mutable_terms().erase(p.mutable_terms().begin());
    }
  }
  return {MPoly<F>::from_sorted(a.ring(), std::move(qt)), MPoly<F>::from_sorted(a.ring(), std::move(rt))};
}

/// Exact quotient; throws ArithmeticError if b does not divide a.
template <class F>
MPoly<F> exact_div(const MPoly<F>& a, const MPoly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero_poly()) throw ArithmeticError("inexact multivariate division");
  return q;
}

/// Converts a polynomial in variables (x, y) = (var_outer, var_inner) into
/// UPoly<UPoly<F>>: outer index is the power of var_outer; every other variable must be absent.
template <class F>
UPoly<UPoly<F>> to_bivariate(const MPoly<F>& p, int var_outer, int var_inner) {
  std::vector<std::vector<F>> rows;
  for (const auto& tm : p.terms()) {
    for (int k = 0; k < p.ring()->nvars(); ++k)
      if (k != var_outer && k != var_inner && tm.m[k] != 0)
        throw ArithmeticError("to_bivariate: polynomial involves other variables");
    auto i = static_cast<std::size_t>(tm.m[var_outer]);
    auto j = static_cast<std::size_t>(tm.m[var_inner]);
    if (rows.size() <= i) rows.resize(i + 1);
    if (rows[i].size() <= j) rows[i].resize(j + 1, F(0));
    rows[i][j] += tm.c;
  }
  std::vector<UPoly<F>> outer;
  for (auto& r : rows) outer.emplace_back(std::move(r));
  return UPoly<UPoly<F>>(std::move(outer));
}

template <class F>
UPoly<F> to_univariate(const MPoly<F>& p, int var) {
  std::vector<F> c;
  for (const auto& tm : p.terms()) {
    if (tm.m.degree() != tm.m[var]) throw ArithmeticError("to_univariate: polynomial involves other variables");
    auto i = static_cast<std::size_t>(tm.m[var]);
    if (c.size() <= i) c.resize(i + 1, F(0));
    c[i] += tm.c;
  }
  return UPoly<F>(std::move(c));
}

template <class F>
MPoly<F> from_univariate(const RingPtr& ring, const UPoly<F>& f, int var) {
  std::vector<Term<F>> t;
  for (int i = 0; i <= f.degree(); ++i)
    if (!is_zero(f.coeff(i))) t.push_back({Monomial::var(var, i), f.coeff(i)});
  return MPoly<F>::from_terms(ring, std::move(t));
}

template <class F>
MPoly<F> from_bivariate(const RingPtr& ring, const UPoly<UPoly<F>>& f, int var_outer, int var_inner) {
  std::vector<Term<F>> t;
  for (int i = 0; i <= f.degree(); ++i) {
    const UPoly<F>& row = f.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= row.degree(); ++j)
      if (!is_zero(row.coeff(j)))
        t.push_back({Monomial::var(var_outer, i) * Monomial::var(var_inner, j), row.coeff(j)});
  }
  return MPoly<F>::from_terms(ring, std::move(t));
}

using QMPoly = MPoly<Rational>;

/// Parses sums of terms such as "7151648400xy^2 - 3/2*x^2*z + t^4W". Variable
/// names are matched greedily against the ring, so juxtaposed single-letter
/// names need no '*'. Coefficients are integers or fractions.
QMPoly parse_mpoly(std::string_view text, const RingPtr& ring);

}  // namespace sextic
