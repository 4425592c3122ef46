#pragma once

#include "sextic/config.hpp"
#include "sextic/delpezzo.hpp"
#include "sextic/errors.hpp"
#include "sextic/fp.hpp"
#include "sextic/gaussian.hpp"
#include "sextic/linalg.hpp"
#include "sextic/monomial.hpp"
#include "sextic/mpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace sextic {

template <class F>
using PointF = std::array<F, 3>;
template <class F>
using Points = std::array<PointF<F>, 8>;

/// Degree d and requested vanishing order at each of the eight points.
struct MultiplicityAssignment {
  int degree = 0;
  std::array<int, 8> mults{};

  /// Sum of m(m+1)/2.
  int conditions() const {
    int n = 0;
    for (int m : mults) n += m * (m + 1) / 2;
    return n;
  }
  int monomials() const { return (degree + 1) * (degree + 2) / 2; }
  int expected_dimension() const { return monomials() > conditions() ? monomials() - conditions() : 0; }
  std::string str() const;
};

/// Rows: for each point P_i with m_i > 0, every partial derivative of order
/// exactly m_i - 1 evaluated at P_i (by Euler's relation these imply the lower
/// orders). Columns: degree-d monomials in lex order.
template <class F>
Matrix<F> condition_matrix(const Points<F>& pts, const MultiplicityAssignment& ma) {
  const auto cols = monomials_of_degree(3, ma.degree);
  std::vector<std::vector<F>> rows;
  for (std::size_t i = 0; i < 8; ++i) {
    const int m = ma.mults[i];
    if (m <= 0) continue;
    for (const auto& alpha : monomials_of_degree(3, m - 1)) {
      std::vector<F> row;
      row.reserve(cols.size());
      for (const auto& beta : cols) {
        F val(1);
        for (int k = 0; k < 3 && !is_zero(val); ++k) {
          int b = beta[k], a = alpha[k];
          if (b < a) {
            val = F(0);
            break;
          }
          for (int f = b; f > b - a; --f) val *= F(f);
          for (int e = 0; e < b - a; ++e) val *= pts[i][static_cast<std::size_t>(k)];
        }
        row.push_back(val);
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Matrix<F>(0, cols.size());
  return Matrix<F>::from_rows(rows);
}

/// Ternary form with the given coefficients on the lex monomial list of degree d.
template <class F>
MPoly<F> form_from_coefficients(const std::vector<F>& coeffs, int degree) {
  const auto cols = monomials_of_degree(3, degree);
  std::vector<Term<F>> terms;
  for (std::size_t k = 0; k < cols.size(); ++k)
    if (!is_zero(coeffs[k])) terms.push_back({cols[k], coeffs[k]});
  return MPoly<F>::from_terms(plane_ring(), std::move(terms));
}

template <class F>
std::vector<F> coefficients_of_form(const MPoly<F>& f, int degree) {
  const auto cols = monomials_of_degree(3, degree);
  std::vector<F> out;
  out.reserve(cols.size());
  for (const auto& m : cols) out.push_back(f.coeff(m));
  return out;
}

/// Dimension of the linear system (nullity of the condition matrix).
template <class F>
int system_dimension(const Points<F>& pts, const MultiplicityAssignment& ma) {
  Matrix<F> a = condition_matrix(pts, ma);
  if (a.rows() == 0) return ma.monomials();
  return ma.monomials() - static_cast<int>(rank(a));
}

/// Nullspace basis in reduced echelon form. Throws UnexpectedDimension when the
/// dimension differs from the generic value.
template <class F>
std::vector<MPoly<F>> linear_system_basis(const Points<F>& pts, const MultiplicityAssignment& ma) {
  Matrix<F> a = condition_matrix(pts, ma);
  std::vector<std::vector<F>> ns;
  if (a.rows() == 0) {
    const auto n = static_cast<std::size_t>(ma.monomials());
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<F> e(n, F(0));
      e[k] = F(1);
      ns.push_back(std::move(e));
    }
  } else {
    ns = nullspace(a);
  }
  if (static_cast<int>(ns.size()) != ma.expected_dimension())
    throw UnexpectedDimension("linear system " + ma.str() + " has dimension " + std::to_string(ns.size()) +
                              ", expected " + std::to_string(ma.expected_dimension()));
  std::vector<MPoly<F>> out;
  for (const auto& v : ns) out.push_back(form_from_coefficients(v, ma.degree));
  return out;
}

/// All partials of order < m vanish at p.
template <class F>
bool vanishes_to_order(const MPoly<F>& f, const PointF<F>& p, int m) {
  std::vector<F> pt(p.begin(), p.end());
  std::vector<MPoly<F>> layer{f};
  for (int order = 0; order < m; ++order) {
    std::vector<MPoly<F>> next;
    for (const auto& g : layer) {
      if (!is_zero(g.eval(pt))) return false;
      for (int k = 0; k < 3; ++k) next.push_back(g.derivative(k));
    }
    layer = std::move(next);
  }
  return true;
}

inline MultiplicityAssignment uniform_assignment(int degree, int m) {
  MultiplicityAssignment ma{degree, {}};
  ma.mults.fill(m);
  return ma;
}

/// Basis {u, v} of the cubics through the eight points, in echelon form.
template <class F>
std::pair<MPoly<F>, MPoly<F>> anticanonical_pencil(const Points<F>& pts) {
  auto b = linear_system_basis(pts, uniform_assignment(3, 1));
  return {b[0], b[1]};
}

/// Canonical complement of span{u^2, uv, v^2} in the sextics double at every
/// point: the representative with zero coefficients at the echelon pivots of
/// that span, scaled to leading coefficient 1.
template <class F>
MPoly<F> complement_of_squares(const std::vector<MPoly<F>>& sys, const MPoly<F>& u, const MPoly<F>& v) {
  std::vector<std::vector<F>> sq{coefficients_of_form(u * u, 6), coefficients_of_form(u * v, 6),
                                 coefficients_of_form(v * v, 6)};
  Matrix<F> s = Matrix<F>::from_rows(sq);
  auto piv = s.rref();
  if (piv.size() != 3) throw UnexpectedDimension("u^2, uv, v^2 are linearly dependent");
  for (const auto& b : sys) {
    std::vector<F> r = coefficients_of_form(b, 6);
    for (std::size_t k = 0; k < piv.size(); ++k) {
      F f = r[piv[k]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * s(k, j);
    }
    for (const auto& x : r)
      if (!is_zero(x)) {
        F inv = F(1) / x;
        for (auto& y : r) y *= inv;
        return form_from_coefficients(r, 6);
      }
  }
  throw UnexpectedDimension("double sextics do not extend span{u^2, uv, v^2}");
}

template <class F>
MPoly<F> double_sextic_w(const Points<F>& pts, const MPoly<F>& u, const MPoly<F>& v) {
  return complement_of_squares(linear_system_basis(pts, uniform_assignment(6, 2)), u, v);
}

/// The default basis (u, v, w) of a configuration, over F.
template <class F>
struct SexticBasis {
  MPoly<F> u, v, w;
};

template <class F>
SexticBasis<F> sextic_basis(const Points<F>& pts) {
  auto [u, v] = anticanonical_pencil(pts);
  return {u, v, double_sextic_w(pts, u, v)};
}

/// Field conversions of configuration data.
Points<Rational> rational_points(const PointConfiguration& p);
Points<Gaussian> gaussian_points(const PointConfiguration& p);
/// Images in GF(p) (current modulus) with i -> sqrt_minus_one.
Points<Fp> points_mod_p(const PointConfiguration& p, const Fp& sqrt_minus_one);
Fp gaussian_mod_p(const Gaussian& g, const Fp& sqrt_minus_one);

/// A prime p = 1 mod 4 below 2^62 and a square root of -1 modulo p.
std::uint64_t gaussian_prime();
std::uint64_t gaussian_prime_sqrt_minus_one();

bool is_real_form(const MPoly<Gaussian>& f);
/// Real part as a rational form (the imaginary part must be zero).
QMPoly to_rational_form(const MPoly<Gaussian>& f);
MPoly<Gaussian> to_gaussian_form(const QMPoly& f);
MPoly<Gaussian> conj_form(const MPoly<Gaussian>& f);

/// Real basis of a conjugation-stable system over Q(i): real and imaginary
/// parts of every element, echelonized. Throws NotConjStable.
std::vector<QMPoly> real_basis(const std::vector<MPoly<Gaussian>>& system, int degree);

}  // namespace sextic
