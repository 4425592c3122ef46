#include "sextic/verify.hpp"

#include "sextic/errors.hpp"
#include "sextic/linalg.hpp"
#include "sextic/resultant.hpp"

#include <algorithm>

namespace sextic {

namespace {

/// Q, K with x_i replaced by its value on the plane.
QMPoly restrict_to_plane(const QMPoly& f, const AmbientPlane& h, int i) {
  const auto& ring = ambient_ring();
  std::vector<QMPoly> images;
  QMPoly xi(ring);
  for (int k = 0; k < 4; ++k)
    if (k != i) xi = xi - QMPoly::variable(ring, k) * (h.u[static_cast<std::size_t>(k)] / h.u[static_cast<std::size_t>(i)]);
  for (int k = 0; k < 4; ++k) images.push_back(k == i ? xi : QMPoly::variable(ring, k));
  return f.substitute(images);
}

int solve_var_for(const AmbientPlane& h) {
  int best = -1;
  for (int k = 0; k < 4; ++k)
    if (!h.u[static_cast<std::size_t>(k)].is_zero() &&
        (best < 0 || h.u[static_cast<std::size_t>(k)].abs() > h.u[static_cast<std::size_t>(best)].abs()))
      best = k;
  if (best < 0) throw DegenerateInput("zero plane");
  return best;
}

}  // namespace

std::string TritangencyResult::str() const {
  switch (status) {
    case TritangencyStatus::NotTritangent: return "not_tritangent";
    case TritangencyStatus::Tritangent: return "tritangent(" + std::to_string(real_contacts) + ")";
    case TritangencyStatus::DegenerateContact: return "degenerate_contact";
    case TritangencyStatus::BaseDegenerate: return "base_degenerate";
  }
  return "?";
}

QPoly project_to_sextic(const QMPoly& q, const QMPoly& k, const AmbientPlane& h, const ProjectionSpec& spec) {
  const int i = spec.solve_var, j = spec.eliminate_var;
  if (i == j || i < 0 || i > 3 || j < 0 || j > 3) throw DegenerateInput("invalid projection spec");
  if (h.u[static_cast<std::size_t>(i)].is_zero()) throw ProjectionDegenerate("plane has zero x_i coefficient");
  std::vector<int> rest;
  for (int v = 0; v < 4; ++v)
    if (v != i && v != j) rest.push_back(v);
  const int a = rest[0], b = rest[1];
  const auto& ring = ambient_ring();
  std::vector<QMPoly> dehom;
  for (int v = 0; v < 4; ++v)
    dehom.push_back(v == a ? QMPoly::constant(ring, Rational(1)) : QMPoly::variable(ring, v));
  QMPoly qh = restrict_to_plane(q, h, i);
  QMPoly kh = restrict_to_plane(k, h, i);
  if (spec.shear[0] != 0 || spec.shear[1] != 0) {
    std::vector<QMPoly> sh;
    for (int v = 0; v < 4; ++v) sh.push_back(QMPoly::variable(ring, v));
    const QMPoly xj = QMPoly::variable(ring, j);
    sh[static_cast<std::size_t>(a)] = sh[static_cast<std::size_t>(a)] + xj * Rational(spec.shear[0]);
    sh[static_cast<std::size_t>(b)] = sh[static_cast<std::size_t>(b)] + xj * Rational(spec.shear[1]);
    qh = qh.substitute(sh);
    kh = kh.substitute(sh);
  }
  qh = qh.substitute(dehom);
  kh = kh.substitute(dehom);
  auto qb = to_bivariate(qh, j, b), kb = to_bivariate(kh, j, b);
  // With lc_j(Q|H) constant, Res_j is lc^deg(K) times the product of K over the
  // two points of Q|H in each fiber, whatever the x_j-degree of K|H.
  if (qb.degree() != 2 || qb.lc().degree() != 0 || kb.is_zero_poly())
    throw ProjectionDegenerate("quadric does not have full degree in the eliminated variable");
  QPoly f = resultant(qb, kb);
  if (f.degree() != 6) throw ProjectionDegenerate("projected sextic has a root at infinity");
  return f;
}

std::vector<ProjectionSpec> projection_order(const AmbientPlane& h) {
  std::vector<int> vars{0, 1, 2, 3};
  std::stable_sort(vars.begin(), vars.end(), [&](int x, int y) {
    return h.u[static_cast<std::size_t>(x)].abs() > h.u[static_cast<std::size_t>(y)].abs();
  });
  std::vector<ProjectionSpec> out;
  for (int i : vars)
    for (int j = 3; j >= 0; --j)
      if (j != i) out.push_back({i, j});
  return out;
}

bool quadric_section_is_square(const QMPoly& q, const AmbientPlane& h) {
  const int i = solve_var_for(h);
  QMPoly qh = restrict_to_plane(q, h, i);
  std::vector<int> rest;
  for (int v = 0; v < 4; ++v)
    if (v != i) rest.push_back(v);
  Matrix<Rational> m(3, 3);
  for (const auto& tm : qh.terms()) {
    std::vector<std::size_t> at;
    for (std::size_t r = 0; r < 3; ++r)
      for (int e = 0; e < tm.m[rest[r]]; ++e) at.push_back(r);
    if (at.size() != 2) throw DegenerateInput("quadric is not a quadratic form");
    if (at[0] == at[1]) {
      m(at[0], at[0]) += tm.c;
    } else {
      m(at[0], at[1]) += tm.c / Rational(2);
      m(at[1], at[0]) += tm.c / Rational(2);
    }
  }
  return rank(m) <= 1;
}

TritangencyResult verify_tritangent(const QMPoly& q, const QMPoly& k, const AmbientPlane& h) {
  TritangencyResult res;
  if (quadric_section_is_square(q, h)) return res;
  // Plain specs first, then the same specs under a few fixed shears.
  std::vector<ProjectionSpec> specs = projection_order(h);
  const std::size_t plain = specs.size();
  for (const std::array<long, 2>& s : {std::array<long, 2>{1, 2}, {-2, 3}, {3, -1}, {5, 7}})
    for (std::size_t n = 0; n < plain; ++n) {
      if (h.u[static_cast<std::size_t>(specs[n].solve_var)].is_zero()) continue;
      ProjectionSpec sheared = specs[n];
      sheared.shear = s;
      specs.push_back(sheared);
    }
  std::optional<TritangencyResult> repeated;
  for (const auto& spec : specs) {
    QPoly f;
    try {
      f = project_to_sextic(q, k, h, spec);
    } catch (const ProjectionDegenerate&) {
      continue;
    }
    TritangencyResult cur;
    cur.spec = spec;
    cur.sextic = f;
    auto g = perfect_square_root(f);
    if (!g) {
      // Without a repeated root so far the first projection decides.
      if (repeated) continue;
      cur.status = TritangencyStatus::NotTritangent;
      return cur;
    }
    cur.cubic = *g;
    if (!is_squarefree_q(*g)) {
      cur.status = TritangencyStatus::DegenerateContact;
      if (!repeated) repeated = cur;
      continue;
    }
    cur.status = TritangencyStatus::Tritangent;
    cur.real_contacts = sturm_count(*g);
    return cur;
  }
  return repeated ? *repeated : res;
}

}  // namespace sextic
