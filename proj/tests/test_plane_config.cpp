#include "doctest.h"
#include "oracles.hpp"

#include "sextic/classes.hpp"
#include "sextic/config.hpp"
#include "sextic/fixtures.hpp"
#include "sextic/linear_systems.hpp"
#include "sextic/resultant.hpp"

using namespace sextic;

namespace {

using IntConfig = std::array<std::array<long, 3>, 8>;

IntConfig random_int_config(oracle::Rng& rng, long height) {
  IntConfig c;
  for (auto& p : c) {
    do {
      for (auto& x : p) x = rng.range(-height, height);
    } while (p[0] == 0 && p[1] == 0 && p[2] == 0);
  }
  return c;
}

Rational det3(const std::array<long, 3>& a, const std::array<long, 3>& b, const std::array<long, 3>& c) {
  return bareiss_determinant<Rational>({{Rational(a[0]), Rational(a[1]), Rational(a[2])},
                                        {Rational(b[0]), Rational(b[1]), Rational(b[2])},
                                        {Rational(c[0]), Rational(c[1]), Rational(c[2])}});
}

// Brute-force general position: pairwise distinct, no collinear triple, no six on a conic.
bool oracle_general_position(const IntConfig& c) {
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      const auto &a = c[i], &b = c[j];
      if (a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1]) return false;
    }
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k)
        if (det3(c[i], c[j], c[k]).is_zero()) return false;
  for (int skip1 = 0; skip1 < 8; ++skip1)
    for (int skip2 = skip1 + 1; skip2 < 8; ++skip2) {
      std::vector<std::vector<Rational>> m;
      for (int i = 0; i < 8; ++i) {
        if (i == skip1 || i == skip2) continue;
        const auto& p = c[i];
        m.push_back({Rational(p[0] * p[0]), Rational(p[0] * p[1]), Rational(p[0] * p[2]), Rational(p[1] * p[1]),
                     Rational(p[1] * p[2]), Rational(p[2] * p[2])});
      }
      if (bareiss_determinant(m).is_zero()) return false;
    }
  return true;
}

PointConfiguration fixture_config(const char* name) { return config_from_json(fixture_input(find_fixture(name))); }

}  // namespace

TEST_CASE("validation agrees with brute-force general position") {
  oracle::Rng rng(17);
  int valid = 0, invalid = 0;
  for (int k = 0; k < 150; ++k) {
    // Small heights make coincidences common.
    IntConfig c = random_int_config(rng, k % 3 == 0 ? 2 : 6);
    const bool expect = oracle_general_position(c);
    ValidationReport rep;
    try {
      rep = validate_configuration(PointConfiguration::rational(c));
    } catch (const DegenerateConfiguration&) {
      rep = ValidationReport::fail("construction", "");
    }
    // General position is necessary; the remaining checks rarely fail on top of it.
    if (!expect) CHECK_FALSE(rep.ok);
    if (rep.ok) CHECK(expect);
    (rep.ok ? valid : invalid)++;
  }
  CHECK(valid > 20);
  CHECK(invalid > 20);
}

TEST_CASE("validation names the failed condition") {
  IntConfig c{{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 3}, {3, -1, 2}, {5, 7, -2}, {2, -3, 7}}};
  auto rep = validate_configuration(PointConfiguration::rational(c));
  CHECK_FALSE(rep.ok);
  CHECK(rep.condition == "collinear triple");
  CHECK(rep.detail == "points 1,2,3");

  // Six points on the conic xz = y^2.
  IntConfig conic{{{1, 0, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 4}, {1, 3, 9}, {1, -1, 1}, {3, 5, -2}, {2, -7, 5}}};
  rep = validate_configuration(PointConfiguration::rational(conic));
  CHECK_FALSE(rep.ok);
  CHECK(rep.condition == "six points on a conic");

  IntConfig dup{{{1, 0, 0}, {0, 1, 0}, {2, 0, 0}, {0, 0, 1}, {1, 2, 3}, {3, -1, 2}, {5, 7, -2}, {2, -3, 7}}};
  rep = validate_configuration(PointConfiguration::rational(dup));
  CHECK_FALSE(rep.ok);
  CHECK(rep.condition == "duplicate points");

  for (const char* name : {"ex-2.3", "ex-2.4", "ex-3.3a", "ex-3.3b", "ex-3.4", "ex-3.5"})
    CHECK(validate_configuration(fixture_config(name)).ok);
}

TEST_CASE("conjugation involution and oval count") {
  CHECK(fixture_config("ex-2.3").s() == 5);
  CHECK(fixture_config("ex-3.3a").s() == 1);
  CHECK(fixture_config("ex-3.4").s() == 2);
  CHECK(fixture_config("ex-3.5").s() == 3);
  auto p = fixture_config("ex-3.3a");
  CHECK(p.field() == FieldTag::Qi);
  for (int i = 0; i < 8; ++i) {
    const int j = p.involution()[i];
    CHECK(p.involution()[j] == i);
    CHECK(proportional(conj_point(p.point(i)), p.point(j)));
  }

  // A complex point without its conjugate is rejected.
  std::array<PointQi, 8> pts;
  IntConfig base{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {3, -1, 2}, {5, 7, -2}, {2, -3, 7}}};
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 3; ++k) pts[i][k] = Gaussian(base[i][k]);
  pts[7][0] = Gaussian(Rational(2), Rational(1));
  CHECK_THROWS_AS(PointConfiguration::make(FieldTag::Qi, pts), ParseError);
  CHECK_THROWS_AS(PointConfiguration::make(FieldTag::Q, pts), ParseError);
}

TEST_CASE("normalization and hash ignore scaling") {
  IntConfig a{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}, {3, -1, 2}, {5, 7, -2}, {2, -3, 7}}};
  IntConfig b = a;
  for (auto& x : b[4]) x *= -3;
  for (auto& x : b[6]) x *= 2;
  auto pa = PointConfiguration::rational(a);
  auto pb = PointConfiguration::rational(b);
  CHECK(pa.hash() == pb.hash());
  for (int i = 0; i < 8; ++i) CHECK(proportional(pa.point(i), pb.point(i)));
  // Primitive integer vectors keep the given sign.
  CHECK(pb.point(4) == PointQi{Gaussian(-1), Gaussian(-2), Gaussian(-3)});
  CHECK(pb.point(6) == pa.point(6));
  b[7][2] = 8;
  CHECK(pa.hash() != PointConfiguration::rational(b).hash());
}

TEST_CASE("linear systems vanish as required and have generic dimension") {
  oracle::Rng rng(23);
  int checked = 0;
  while (checked < 4) {
    IntConfig c = random_int_config(rng, 9);
    if (!oracle_general_position(c)) continue;
    ++checked;
    auto pts = rational_points(PointConfiguration::rational(c));
    std::vector<MultiplicityAssignment> systems{uniform_assignment(3, 1), uniform_assignment(6, 2)};
    for (const auto& cls : all_classes()) {
      if (cls.index % 13 != 0) continue;
      auto [m1, m2] = class_systems(cls);
      systems.push_back(m1);
      if (cls.kind != ClassKind::T8) systems.push_back(m2);
    }
    for (const auto& ma : systems) {
      auto basis = linear_system_basis(pts, ma);
      CHECK(static_cast<int>(basis.size()) == ma.expected_dimension());
      for (const auto& f : basis)
        for (int i = 0; i < 8; ++i) {
          CHECK(vanishes_to_order(f, pts[i], ma.mults[i]));
          // Not forced to vanish one order higher (generic point of the system).
          if (basis.size() == 1 && ma.mults[i] == 0) CHECK_FALSE(vanishes_to_order(f, pts[i], 1));
        }
      // Modular image has the same dimension.
      ModulusScope scope(gaussian_prime());
      auto pp = points_mod_p(PointConfiguration::rational(c), Fp::from_raw(gaussian_prime_sqrt_minus_one()));
      CHECK(system_dimension(pp, ma) == ma.expected_dimension());
    }
  }
}

TEST_CASE("multiplicity assignment arithmetic") {
  auto ma = uniform_assignment(6, 2);
  CHECK(ma.monomials() == 28);
  CHECK(ma.conditions() == 24);
  CHECK(ma.expected_dimension() == 4);
  CHECK(uniform_assignment(3, 1).expected_dimension() == 2);
  auto [m1, m2] = class_systems(find_class(ClassKind::T8, {0}));
  CHECK(m1.degree == 6);
  CHECK(m1.mults[0] == 3);
  CHECK(m1.expected_dimension() == 1);
}
