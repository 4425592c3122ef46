#include "doctest.h"
#include "oracles.hpp"

#include "sextic/classes.hpp"
#include "sextic/fixtures.hpp"
#include "sextic/tritangents.hpp"

#include <map>
#include <set>

using namespace sextic;

namespace {

PointConfiguration fixture_config(const char* name) { return config_from_json(fixture_input(find_fixture(name))); }

}  // namespace

TEST_CASE("class list: sizes, order and labels") {
  const auto& cls = all_classes();
  REQUIRE(cls.size() == 120);
  std::map<ClassKind, int> count;
  std::set<std::string> labels;
  for (std::size_t k = 0; k < cls.size(); ++k) {
    CHECK(cls[k].index == static_cast<int>(k));
    ++count[cls[k].kind];
    labels.insert(cls[k].label());
    CHECK(std::is_sorted(cls[k].indices.begin(), cls[k].indices.end()));
    CHECK(&find_class(cls[k].kind, cls[k].indices) == &cls[k]);
  }
  CHECK(labels.size() == 120);
  CHECK(count[ClassKind::T8] == 8);
  CHECK(count[ClassKind::T28] == 28);
  CHECK(count[ClassKind::T56] == 56);
  CHECK(count[ClassKind::T56_2] == 28);
  CHECK(cls[0].label() == "T8(1)");
  CHECK(cls[8].label() == "T28(1,2)");
  CHECK(cls[36].label() == "T56(1,2,3)");
  CHECK(cls[92].label() == "T56_2(1,2)");
  CHECK(find_class(ClassKind::T28, {6, 5}).label() == "T28(6,7)");
  CHECK(parse_class_kind("56-2") == ClassKind::T56_2);
  CHECK_THROWS_AS(parse_class_kind("57"), ParseError);

  for (const auto& c : cls) {
    auto [m1, m2] = class_systems(c);
    CHECK(m1.expected_dimension() == 1);
    if (c.kind == ClassKind::T8) continue;
    CHECK(m2.expected_dimension() == 1);
    // Bertini pairs: the two classes add up to -2K, so degrees sum to 6 and multiplicities to 2.
    CHECK(m1.degree + m2.degree == 6);
    for (int i = 0; i < 8; ++i) CHECK(m1.mults[i] + m2.mults[i] == 2);
  }
}

TEST_CASE("fixture censuses") {
  struct Want {
    const char* name;
    int real, totally_real;
  };
  for (auto w : {Want{"ex-2.3", 120, 120}, Want{"ex-2.4", 120, 84}, Want{"ex-3.3a", 8, 0}, Want{"ex-3.3b", 8, 8},
                 Want{"ex-3.4", 16, 1}}) {
    CAPTURE(w.name);
    auto r = census(fixture_config(w.name));
    CHECK(r.n_real == w.real);
    CHECK(r.n_totally_real == w.totally_real);
    CHECK(r.n_real == expected_real_count(r.s));
    REQUIRE(r.classes.size() == 120);
    int real = 0;
    for (const auto& v : r.classes) {
      real += v.real ? 1 : 0;
      if (!v.real) continue;
      CHECK((v.real_contacts == 1 || v.real_contacts == 3));
      // Independent root count of the residual cubic.
      CHECK(oracle::bisection_root_count(v.residual) == v.real_contacts);
    }
    CHECK(real == r.n_real);
  }
}

TEST_CASE("plane routes agree and the section is a square") {
  auto p = fixture_config("ex-2.4");
  CensusOptions o;
  o.planes = true;
  auto ctx = make_context(p, o);
  REQUIRE(ctx.branch.has_value());
  for (const auto& cls : all_classes()) {
    CAPTURE(cls.label());
    ClassVerdict v = tritangent_plane(ctx, cls);
    REQUIRE(v.plane.has_value());
    CHECK(v.plane->proportional_to(plane_from_product(ctx, cls)));
    REQUIRE(v.section_real_roots.has_value());
    CHECK(*v.section_real_roots == v.real_contacts);
    // The plane meets the branch curve in a doubled cubic.
    if (!v.plane->u[3].is_zero()) {
      auto sec = plane_section_sextic(*ctx.branch, *v.plane);
      auto root = perfect_square_root(sec);
      REQUIRE(root.has_value());
      CHECK(oracle::bisection_root_count(*root) + (root->degree() < 3 ? 1 : 0) == v.real_contacts);
    }
  }
}

TEST_CASE("residual root count does not depend on the frame") {
  auto p = fixture_config("ex-2.4");
  auto ctx = make_context(p);
  std::uint64_t state = 99;
  for (const auto& cls : all_classes()) {
    if (cls.kind == ClassKind::T8 || cls.index % 5 != 0) continue;
    auto pair = real_exceptional_pair(p, cls);
    std::vector<BasePoint> base;
    for (int i : pair.base_points) {
      PointQi q = p.point(i);
      base.push_back({q, 1});
    }
    QPoly r0 = residual_cubic_retry(pair.c1, pair.c2, base, 7);
    QPoly r1;
    for (int attempt = 0; attempt < 8; ++attempt) {
      Frame fr = Frame::random(state);
      try {
        r1 = residual_cubic(pair.c1, pair.c2, base, fr);
        break;
      } catch (const GenericityFailure&) {
      }
    }
    REQUIRE(r1.degree() == 3);
    CHECK(sturm_count(r0) == sturm_count(r1));
  }
}

TEST_CASE("tangent cone at a triple point") {
  auto ring = plane_ring();
  // Triple point at (0:0:1) with cone x^3 - x y^2 = x (x - y)(x + y): three real tangents.
  QMPoly s = parse_mpoly("x^3 z^3 - x y^2 z^3 + y^6 + x^5 y", ring);
  auto tc = tangent_cone_cubic(s, {Rational(0), Rational(0), Rational(1)});
  CHECK(tc.cubic.degree() == 3);
  CHECK(sturm_count(tc.cubic) == 3);
  QMPoly one_real = parse_mpoly("x^3 z^3 + y^3 z^3 + y^6", ring);
  CHECK(sturm_count(tangent_cone_cubic(one_real, {Rational(0), Rational(0), Rational(1)}).cubic) == 1);
  QMPoly double_pt = parse_mpoly("x^2 z^4 + y^6", ring);
  CHECK_THROWS_AS(tangent_cone_cubic(double_pt, {Rational(0), Rational(0), Rational(1)}), NotTriplePoint);
}

TEST_CASE("real-count law on random configurations") {
  for (int s = 1; s <= 5; ++s) {
    auto r = search({s, 12}, 3, 1000 + static_cast<std::uint64_t>(s));
    CHECK(static_cast<int>(r.samples.size()) + r.rejected == 3);
    CHECK(static_cast<int>(r.rejection_log.size()) == r.rejected);
    for (const auto& smp : r.samples) {
      CHECK(smp.config.s() == s);
      CHECK(smp.n_real == expected_real_count(s));
      CHECK(smp.n_totally_real >= 0);
      CHECK(smp.n_totally_real <= smp.n_real);
    }
  }
  CHECK(expected_real_count(1) == 8);
  CHECK(expected_real_count(4) == 64);
  CHECK(expected_real_count(5) == 120);
}

TEST_CASE("search is deterministic and independent of the job count") {
  auto a = search({4, 15}, 4, 77, 1);
  auto b = search({4, 15}, 4, 77, 2);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    CHECK(a.samples[k].index == b.samples[k].index);
    CHECK(a.samples[k].config.str() == b.samples[k].config.str());
    CHECK(a.samples[k].n_totally_real == b.samples[k].n_totally_real);
  }
  CHECK(a.histogram == b.histogram);
  int total = 0;
  for (int h : a.histogram) total += h;
  CHECK(total == static_cast<int>(a.samples.size()));
  CHECK(total == 4 - a.rejected);

  std::uint64_t s1 = 5, s2 = 5;
  CHECK(random_configuration({3, 10}, s1).str() == random_configuration({3, 10}, s2).str());
  CHECK(s1 == s2);
}

TEST_CASE("census jobs give identical reports") {
  auto p = fixture_config("ex-3.4");
  CensusOptions o1, o2;
  o2.jobs = 3;
  auto a = census(p, o1), b = census(p, o2);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t k = 0; k < a.classes.size(); ++k) {
    CHECK(a.classes[k].real == b.classes[k].real);
    CHECK(a.classes[k].real_contacts == b.classes[k].real_contacts);
    CHECK(a.classes[k].residual == b.classes[k].residual);
  }
}
