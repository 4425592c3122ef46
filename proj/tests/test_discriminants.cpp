#include "doctest.h"
#include "oracles.hpp"

#include "sextic/discriminants.hpp"

using namespace sextic;

namespace {

constexpr std::uint64_t kP = 1000003;

FpPoly random_fp_poly(oracle::Rng& rng, int degree, bool monic) {
  std::vector<Fp> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(rng.range(0, 1000000));
  c.emplace_back(monic ? 1L : rng.range(1, 1000000));
  return FpPoly(std::move(c));
}

}  // namespace

TEST_CASE("bidegree arithmetic") {
  CHECK(delta1_bidegree(2, 3) == std::pair<long long, long long>{33, 34});
  CHECK(pullback_bidegree({1440, 152}) == std::pair<long long, long long>{744, 592});
  CHECK(pullback_bidegree({32130, 3626}) == std::pair<long long, long long>{8862, 5236});
  CHECK(pullback_bidegree({1, 0}) == std::pair<long long, long long>{4, 4});
  CHECK(pullback_bidegree({0, -1}) == std::pair<long long, long long>{33, 34});
  // Symmetry of delta1_bidegree under swapping the factors.
  for (long long d = 1; d < 5; ++d)
    for (long long e = 1; e < 5; ++e) {
      auto [a, b] = delta1_bidegree(d, e);
      auto [c, f] = delta1_bidegree(e, d);
      CHECK(a == f);
      CHECK(b == c);
    }
}

TEST_CASE("per-point degrees add up to the totals") {
  const std::pair<ClassKind, int> kinds[] = {
      {ClassKind::T8, 1}, {ClassKind::T28, 2}, {ClassKind::T56, 3}, {ClassKind::T56_2, 8}};
  for (auto [kind, distinguished] : kinds) {
    // T56_2 is symmetric in all points: both roles have the same degree.
    const int sum = kind == ClassKind::T56_2
                        ? 8 * expected_disc_degree(kind, MovingRole::Distinguished)
                        : distinguished * expected_disc_degree(kind, MovingRole::Distinguished) +
                              (8 - distinguished) * expected_disc_degree(kind, MovingRole::Other);
    CHECK(sum == expected_total_degree(kind));
  }
  CHECK(expected_total_degree(ClassKind::T8) == 306);
  CHECK(expected_total_degree(ClassKind::T28) == 216);
  CHECK(expected_total_degree(ClassKind::T56) == 162);
  CHECK(expected_total_degree(ClassKind::T56_2) == 144);
  CHECK(expected_disc_degree(ClassKind::T56_2, MovingRole::Other) == 18);
}

TEST_CASE("class for a moving-point role") {
  for (auto kind : {ClassKind::T8, ClassKind::T28, ClassKind::T56, ClassKind::T56_2}) {
    const auto& d = class_for_role(kind, MovingRole::Distinguished);
    const auto& o = class_for_role(kind, MovingRole::Other);
    CHECK(d.kind == kind);
    CHECK(o.kind == kind);
    CHECK(std::find(d.indices.begin(), d.indices.end(), 7) != d.indices.end());
    CHECK(std::find(o.indices.begin(), o.indices.end(), 7) == o.indices.end());
  }
  CHECK(parse_moving_role("other") == MovingRole::Other);
  CHECK(moving_role_name(MovingRole::Distinguished) == "distinguished");
  CHECK_THROWS_AS(parse_moving_role("moving"), ParseError);
}

TEST_CASE("Cauchy interpolation recovers rational functions") {
  ModulusScope scope(kP);
  oracle::Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const int dn = static_cast<int>(rng.range(0, 12)), dd = static_cast<int>(rng.range(0, 8));
    FpPoly n = random_fp_poly(rng, dn, false), d = random_fp_poly(rng, dd, true);
    if (gcd(n, d).degree() > 0) continue;
    std::vector<Fp> xs, ys, hx, hy;
    for (long a = 1; static_cast<int>(xs.size()) < dn + dd + 6; ++a) {
      if (is_zero(d.eval(Fp(a)))) continue;
      xs.emplace_back(a);
      ys.push_back(n.eval(Fp(a)) / d.eval(Fp(a)));
    }
    for (long a = 5000; a < 5010; ++a) {
      if (is_zero(d.eval(Fp(a)))) continue;
      hx.emplace_back(a);
      hy.push_back(n.eval(Fp(a)) / d.eval(Fp(a)));
    }
    auto r = cauchy_interpolate(xs, ys, hx, hy, 100);
    CHECK(r.num.degree() == dn);
    CHECK(r.den.degree() == dd);
    CHECK(r.den == d);
    CHECK(r.num == n);
    CHECK(r.eval(Fp(777)) == n.eval(Fp(777)) / d.eval(Fp(777)));
    // Too few samples for the true degree: held-out points expose every candidate.
    std::vector<Fp> fx(xs.begin(), xs.begin() + (dn + dd) / 2), fy(ys.begin(), ys.begin() + (dn + dd) / 2);
    if (dn + dd >= 4) CHECK_THROWS_AS(cauchy_interpolate(fx, fy, hx, hy, 100), InterpolationUnstable);
  }
}

TEST_CASE("Newton interpolation") {
  ModulusScope scope(kP);
  oracle::Rng rng(2);
  FpPoly f = random_fp_poly(rng, 40, false);
  std::vector<Fp> xs, ys;
  for (long a = 0; a < 41; ++a) {
    xs.emplace_back(a * 7 + 3);
    ys.push_back(f.eval(xs.back()));
  }
  CHECK(interpolate_polynomial(xs, ys) == f);
}

TEST_CASE("parametric configuration") {
  ModulusScope scope(kP);
  auto pc = ParametricConfig::standard();
  auto pts = pc.specialize(Fp(12));
  CHECK(pts[7][0] == Fp(12));
  CHECK(pts[7][1] == Fp(1));
  CHECK(pts[7][2] == Fp(0));
  auto pts2 = pc.specialize(Fp(13));
  for (int i = 0; i < 7; ++i) CHECK(pts[i] == pts2[i]);
}

TEST_CASE("disc_degree reproduces the type degrees") {
  for (auto kind : {ClassKind::T56_2, ClassKind::T28}) {
    for (auto role : {MovingRole::Distinguished, MovingRole::Other}) {
      DiscDegreeOptions o;
      o.kind = kind;
      o.role = role;
      o.samples = 400;
      auto rep = disc_degree(o);
      CAPTURE(rep.cls.label());
      CHECK(rep.degree == expected_disc_degree(kind, role));
      CHECK(rep.component.degree() == rep.degree);
      CHECK(rep.raw_degree >= rep.degree);
      // The interpolant matches direct evaluation at unsampled parameters.
      ModulusScope scope(o.p);
      int compared = 0;
      for (long a = 900001; a < 900031 && compared < 8; ++a) {
        Fp v;
        try {
          v = disc_value(o.config, rep.cls, Fp(a), 1);
        } catch (const Error&) {
          continue;
        }
        if (is_zero(rep.interpolant.den.eval(Fp(a)))) continue;
        CHECK(rep.interpolant.eval(Fp(a)) == v);
        ++compared;
      }
      CHECK(compared == 8);
      // The component is squarefree.
      CHECK(gcd(rep.component, rep.component.derivative()).degree() == 0);
    }
  }
}
