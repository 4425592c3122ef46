#include "doctest.h"
#include "oracles.hpp"

#include "sextic/fixtures.hpp"
#include "sextic/verify.hpp"

using namespace sextic;

namespace {

// B(1, t, t^2) = g(t)^2 for the monic cubic g = t^3 + a t^2 + b t + c, as a cubic in x0, x1, x2.
QMPoly conic_square_cubic(long a, long b, long c) {
  // g^2 coefficients of t^0..t^6.
  long e[7] = {c * c, 2 * b * c, b * b + 2 * a * c, 2 * c + 2 * a * b, a * a + 2 * b, 2 * a, 1};
  // t^k as a monomial in x0, x1, x2 of degree 3 with x1-degree at most 1.
  const char* mono[7] = {"x0^3", "x0^2*x1", "x0^2*x2", "x0*x1*x2", "x0*x2^2", "x1*x2^2", "x2^3"};
  std::string s;
  for (int k = 0; k < 7; ++k) s += (e[k] < 0 ? " - " : " + ") + std::to_string(std::labs(e[k])) + "*" + mono[k];
  return parse_mpoly(s, ambient_ring());
}

const QMPoly& cone() {
  static const QMPoly q = parse_mpoly("x0*x2 - x1^2", ambient_ring());
  return q;
}

AmbientPlane plane(long a, long b, long c, long d) { return {{Rational(a), Rational(b), Rational(c), Rational(d)}}; }

}  // namespace

TEST_CASE("constructed tritangent planes") {
  const QMPoly extra = parse_mpoly("x3", ambient_ring()) *
                       parse_mpoly("3*x0^2 - x1*x3 + 5*x2*x0 + 2*x3^2 - x1*x2", ambient_ring());
  const AmbientPlane h = plane(0, 0, 0, 1);
  // (t - 1)(t - 2)(t + 3): three real contacts.
  auto r3 = verify_tritangent(cone(), conic_square_cubic(0, -7, 6) + extra, h);
  CHECK(r3.status == TritangencyStatus::Tritangent);
  CHECK(r3.real_contacts == 3);
  CHECK(r3.str() == "tritangent(3)");
  // (t - 1)(t^2 + 1): one real contact.
  auto r1 = verify_tritangent(cone(), conic_square_cubic(-1, 1, -1) + extra, h);
  CHECK(r1.status == TritangencyStatus::Tritangent);
  CHECK(r1.real_contacts == 1);
  // (t - 1)^2 (t + 2): contact of order four.
  auto rd = verify_tritangent(cone(), conic_square_cubic(0, -3, 2) + extra, h);
  CHECK(rd.status == TritangencyStatus::DegenerateContact);
  CHECK(rd.str() == "degenerate_contact");
  // g^2 + t: not a square.
  auto rn =
      verify_tritangent(cone(), conic_square_cubic(0, -7, 6) + parse_mpoly("x0^2*x1", ambient_ring()) + extra, h);
  CHECK(rn.status == TritangencyStatus::NotTritangent);
  CHECK(rn.str() == "not_tritangent");
}

TEST_CASE("projection order and degenerate planes") {
  auto order = projection_order(plane(1, -5, 2, 3));
  REQUIRE(order.size() == 12);
  CHECK(order[0].solve_var == 1);
  CHECK(order[3].solve_var == 3);
  for (const auto& s : order) CHECK(s.solve_var != s.eliminate_var);
  CHECK(order[6].solve_var == 2);
  CHECK(order[9].solve_var == 0);
  CHECK(projection_order(plane(0, 0, 0, 1)).front().solve_var == 3);

  // x0 = 0 is tangent to the cone along a ruling.
  CHECK(quadric_section_is_square(cone(), plane(1, 0, 0, 0)));
  CHECK_FALSE(quadric_section_is_square(cone(), plane(0, 0, 0, 1)));
  auto r = verify_tritangent(cone(), conic_square_cubic(0, -7, 6), plane(1, 0, 0, 0));
  CHECK(r.status == TritangencyStatus::BaseDegenerate);
  CHECK(r.str() == "base_degenerate");
  CHECK_THROWS_AS(project_to_sextic(cone(), conic_square_cubic(0, -7, 6), plane(1, 0, 0, 0), {3, 2}),
                  ProjectionDegenerate);
}

TEST_CASE("census planes verify on the ambient pair") {
  auto p = config_from_json(fixture_input(find_fixture("ex-2.4")));
  CensusOptions o;
  o.planes = true;
  auto rep = census(p, o);
  REQUIRE(rep.branch.has_value());
  auto qk = to_ambient(*rep.branch);
  int checked = 0;
  for (const auto& v : rep.classes) {
    REQUIRE(v.plane.has_value());
    auto r = verify_tritangent(qk.Q, qk.K, *v.plane);
    CAPTURE(v.cls.label());
    CHECK(r.status == TritangencyStatus::Tritangent);
    CHECK(r.real_contacts == v.real_contacts);
    ++checked;
  }
  CHECK(checked == 120);

  oracle::Rng rng(8);
  for (int k = 0; k < 25; ++k) {
    AmbientPlane h = plane(rng.range(-50, 50), rng.range(-50, 50), rng.range(-50, 50), rng.range(1, 50));
    CHECK(verify_tritangent(qk.Q, qk.K, h).status == TritangencyStatus::NotTritangent);
  }
}

TEST_CASE("printed planes of the ambient-pair fixture") {
  const auto& f = find_fixture("ex-4.2");
  auto qk = ambient_from_json(fixture_input(f));
  REQUIRE(f.data.contains("planes"));
  for (const auto& pl : f.data.at("planes")) {
    AmbientPlane h;
    for (std::size_t k = 0; k < 4; ++k) h.u[k] = Rational::parse(pl[k].get<std::string>());
    auto r = verify_tritangent(qk.Q, qk.K, h);
    CHECK(r.status == TritangencyStatus::Tritangent);
    CHECK(r.real_contacts == 3);
  }
}
