#include "doctest.h"
#include "oracles.hpp"

#include "sextic/classes.hpp"
#include "sextic/delpezzo.hpp"
#include "sextic/fixtures.hpp"
#include "sextic/tritangents.hpp"

using namespace sextic;

namespace {

Monomial mono(int i, int j) {
  std::vector<int> e{i, j};
  return Monomial::from_exponents(e);
}

struct Case {
  SexticBasis<Rational> basis;
  QMPoly c;
};

// Small heights keep the prime count low; two base points lie on z = 0.
const std::array<std::array<long, 3>, 8> kSmall{
    {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {3, -1, 2}, {2, 1, -1}, {1, -3, 2}}};

struct Run {
  Case data;
  BranchStats stats;
};

const Run& small() {
  static const Run k = [] {
    auto b = integral_basis(real_sextic_basis(PointConfiguration::rational(kSmall)));
    BranchOptions o;
    o.check_bases = true;
    BranchStats st;
    auto bc = branch_curve(b.u, b.v, b.w, o, &st);
    return Run{Case{b, bc.c}, st};
  }();
  return k;
}

const Case& sample() { return small().data; }

// sum c_ij u^(6-i-2j) v^i w^j / (det J)^2 at a point, when det J is nonzero there.
std::optional<Rational> identity_ratio(const QMPoly& c, const SexticBasis<Rational>& b, const QMPoly& jac,
                                       const std::vector<Rational>& pt) {
  Rational j = jac.eval(pt);
  if (j.is_zero()) return std::nullopt;
  Rational u = b.u.eval(pt), v = b.v.eval(pt), w = b.w.eval(pt);
  Rational s(0);
  for (const auto& tm : c.terms()) {
    const int i = tm.m[0], e = tm.m[1];
    Rational x = tm.c;
    for (int k = 0; k < 6 - i - 2 * e; ++k) x *= u;
    for (int k = 0; k < i; ++k) x *= v;
    for (int k = 0; k < e; ++k) x *= w;
    s += x;
  }
  return s / (j * j);
}

}  // namespace

TEST_CASE("branch curve satisfies the identity at random points") {
  const auto& [b, c] = sample();
  CHECK(newton_polygon_ok(c));
  CHECK(c.coeff(mono(6, 0)) == Rational(1));
  CHECK(is_smooth(c));
  QMPoly jac = jacobian_determinant(b.u, b.v, b.w);
  for (const auto& t : jac.terms()) CHECK(t.m.degree() == 9);
  oracle::Rng rng(41);
  std::optional<Rational> ratio;
  for (int k = 0; k < 12; ++k) {
    std::vector<Rational> pt{Rational(rng.range(-30, 30)), Rational(rng.range(-30, 30)), Rational(rng.range(-30, 30))};
    auto r = identity_ratio(c, b, jac, pt);
    if (!r) continue;
    if (!ratio) ratio = r;
    CHECK(*r == *ratio);
  }
  REQUIRE(ratio.has_value());
  CHECK_FALSE(ratio->is_zero());
  // A perturbed curve fails the exact certificate.
  QMPoly bad = c + parse_mpoly("t W", chart_ring());
  CHECK_FALSE(satisfies_branch_identity(bad, b.u, b.v, b.w));
  CHECK(satisfies_branch_identity(c, b.u, b.v, b.w));
}

TEST_CASE("Groebner route and linear-algebra route agree") {
  const auto& [b, c] = sample();
  BranchStats st;
  auto lin = branch_curve_linear(b.u, b.v, b.w, &st);
  CHECK(st.certified);
  CHECK(lin.c == c);
  CHECK(lin.method == "linear");
}

TEST_CASE("post-hoc S-pair check on the modular runs") {
  const auto& st = small().stats;
  CHECK(st.certified);
  CHECK(st.bases_checked);
  CHECK(st.bases_ok);
  CHECK(st.primes >= 1);
}

TEST_CASE("W-shift covariance") {
  const auto& [b, c] = sample();
  oracle::Rng rng(5);
  for (int k = 0; k < 1; ++k) {
    Rational a(rng.range(-3, 3)), be(rng.range(-3, 3)), g(rng.range(-3, 3));
    QMPoly w2 = b.w + b.u * b.u * QMPoly::constant(plane_ring(), a) + b.u * b.v * QMPoly::constant(plane_ring(), be) +
                b.v * b.v * QMPoly::constant(plane_ring(), g);
    // (u, v, w + a u^2 + b u v + g v^2) has W' = W + a + b t + g t^2.
    auto shifted = branch_curve(b.u, b.v, w2);
    CHECK(shifted.c == w_shift(c, a, be, g));
  }
  CHECK(w_shift(w_shift(c, Rational(2), Rational(-1), Rational(3)), Rational(-2), Rational(1), Rational(-3)) == c);
}

TEST_CASE("ambient pair and chart conversions") {
  const auto& c = sample().c;
  auto qk = to_ambient(c);
  CHECK(qk.Q == parse_mpoly("x0*x2 - x1^2", ambient_ring()));
  for (const auto& t : qk.K.terms()) CHECK(t.m.degree() == 3);
  CHECK(restrict_to_chart(qk.K) == c);
  CHECK(restrict_to_chart(qk.Q).is_zero_poly());
  CHECK(reduce_mod_cone(qk.K) == qk.K);
  QMPoly f = parse_mpoly("x1^3 + 2 x0 x1^2 x3 - x3^3", ambient_ring());
  QMPoly r = reduce_mod_cone(f);
  CHECK(restrict_to_chart(r) == restrict_to_chart(f));
  for (const auto& t : r.terms()) CHECK(t.m[1] <= 1);

  ChartPlane h{Rational(3), Rational(-5, 2), Rational(7)};
  auto a = chart_to_ambient(h);
  auto back = ambient_to_chart(a);
  REQUIRE(back.has_value());
  CHECK(back->e1 == h.e1);
  CHECK(back->e2 == h.e2);
  CHECK(back->e3 == h.e3);
  AmbientPlane nox2{{Rational(1), Rational(2), Rational(0), Rational(3)}};
  CHECK_FALSE(ambient_to_chart(nox2).has_value());
  AmbientPlane s{{Rational(-4, 3), Rational(2), Rational(0), Rational(6)}};
  auto n = s.normalized();
  CHECK(n.u[0] == Rational(2));
  CHECK(n.u[1] == Rational(-3));
  CHECK(n.u[3] == Rational(-9));
  CHECK(n.proportional_to(s));
}

TEST_CASE("monic and degenerate inputs") {
  QMPoly c = parse_mpoly("3 t^6 + W^3 + 1", chart_ring());
  CHECK(monic_t6(c).coeff(mono(6, 0)) == Rational(1));
  CHECK_THROWS_AS(monic_t6(parse_mpoly("W^3 + t", chart_ring())), DegenerateConfiguration);
  CHECK_FALSE(newton_polygon_ok(parse_mpoly("t^6 + t^5 W", chart_ring())));
  // t^6 + W^3 - 1 is smooth; (t^3 - W)^2 is not.
  CHECK(is_smooth(parse_mpoly("t^6 + W^3 - 1", chart_ring())));
  CHECK_FALSE(is_smooth(parse_mpoly("t^6 - 2 t^3 W + W^2", chart_ring())));
}
