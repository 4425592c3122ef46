#include "doctest.h"
#include "oracles.hpp"

#include "sextic/crt.hpp"
#include "sextic/fp.hpp"
#include "sextic/gaussian.hpp"
#include "sextic/mpoly.hpp"
#include "sextic/resultant.hpp"
#include "sextic/univariate.hpp"

using namespace sextic;

namespace {

QPoly qp(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

const QPoly t = QPoly::variable();

}  // namespace

TEST_CASE("scalars") {
  CHECK(Rational::parse("6/-4") == Rational(Integer(-3), Integer(2)));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  Gaussian z = Gaussian::parse("2-i");
  CHECK(z == Gaussian(Rational(2), Rational(-1)));
  CHECK(conj(conj(z)) == z);
  CHECK(Gaussian::parse("-3+2i") * Gaussian::parse("-3-2i") == Gaussian(13));
  CHECK(Gaussian::parse("4i").im() == Rational(4));
  CHECK(Gaussian::parse("-i") == -Gaussian::i());
  CHECK(z * z.inverse() == Gaussian(1));
  ModulusScope scope(1000003);
  Fp a(5);
  CHECK((a * a.inverse()).value() == 1);
  CHECK(Fp(-1).value() == 1000002);
  CHECK(is_prime_u64(1000003));
  CHECK(!is_prime_u64(1000001));
  CHECK(is_prime_u64((std::uint64_t{1} << 61) - 1));
}

TEST_CASE("upoly_gcd") {
  CHECK(gcd(qp({-1, 0, 1}), qp({-1, 1})) == qp({-1, 1}));
  CHECK(gcd(qp({1, 0, 1}), qp({-1, 1})) == qp({1}));
  QPoly f = (t - QPoly(2)) * (t - QPoly(2)) * (t + QPoly(3));
  QPoly g = (t - QPoly(2)) * (t + QPoly(5));
  QPoly d = gcd(f, g);
  CHECK(d == qp({-2, 1}));
  CHECK(rem(f, d).is_zero_poly());
  CHECK(rem(g, d).is_zero_poly());
  CHECK(gcd(QPoly(), QPoly()).is_zero_poly());
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(qp({-6, 11, -6, 1})) == 3);
  CHECK(sturm_count(qp({1, 0, 1})) == 0);
  CHECK(sturm_count(qp({2, -2, 0, 1})) == 1);
  CHECK_THROWS_AS(sturm_count(qp({1, -2, 1})), NotSquarefree);
}

TEST_CASE("sturm_count agrees with bisection oracle") {
  oracle::Rng rng(11);
  int checked = 0;
  while (checked < 150) {
    QPoly f = rng.poly(static_cast<int>(rng.range(1, 8)), 20);
    if (!is_squarefree(f)) continue;
    CHECK(sturm_count(f) == oracle::bisection_root_count(f));
    ++checked;
  }
}

TEST_CASE("resultant examples") {
  using B = UPoly<QPoly>;  // outer variable y, coefficients in x
  const QPoly x = t;
  // Res_y(y - x^3 + x, y)
  B f1(std::vector<QPoly>{x - x * x * x, QPoly(1)});
  B g1(std::vector<QPoly>{QPoly(), QPoly(1)});
  QPoly r1 = resultant(f1, g1);
  CHECK((r1 == x - x * x * x || r1 == x * x * x - x));
  // Res_y(x^2 + y^2 - 1, y - x + 1) = 2x^2 - 2x
  B f2(std::vector<QPoly>{x * x - QPoly(1), QPoly(), QPoly(1)});
  B g2(std::vector<QPoly>{QPoly(1) - x, QPoly(1)});
  CHECK(resultant(f2, g2) == qp({0, -2, 2}));
  CHECK(subresultant_resultant(f2, g2) == sylvester_resultant(f2, g2));
  CHECK_THROWS_AS(resultant(B(), g2), DegenerateInput);
}

TEST_CASE("resultant properties") {
  oracle::Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    QPoly f = rng.poly(static_cast<int>(rng.range(1, 5)), 9);
    QPoly g = rng.poly(static_cast<int>(rng.range(1, 5)), 9);
    QPoly h = rng.poly(static_cast<int>(rng.range(1, 4)), 9);
    Rational fg = resultant(f, g);
    Rational gf = resultant(g, f);
    CHECK(fg == ((f.degree() * g.degree()) % 2 == 0 ? gf : -gf));
    CHECK(resultant(f, g * h) == fg * resultant(f, h));
    CHECK(subresultant_resultant(f, g * h) == sylvester_resultant(f, g * h));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(qp({-1, 0, 1})) == Rational(4));
  CHECK(discriminant(qp({0, 0, 1})) == Rational(0));
  CHECK(discriminant(qp({2, -2, 0, 1})) == Rational(-76));
  oracle::Rng rng(7);
  for (int k = 0; k < 30; ++k) {
    QPoly g = rng.poly(static_cast<int>(rng.range(1, 4)), 9);
    QPoly r = t - QPoly(Rational(rng.range(-5, 5)));
    QPoly f = g * r * r;
    CHECK(discriminant(f).is_zero());
    CHECK(gcd(f, f.derivative()).degree() >= 1);
    QPoly h = rng.poly(static_cast<int>(rng.range(2, 6)), 9);
    CHECK(discriminant(h).is_zero() == (gcd(h, h.derivative()).degree() >= 1));
  }
}

TEST_CASE("perfect_square_root") {
  auto r1 = perfect_square_root(qp({0, 0, 1, 0, -2, 0, 1}));
  REQUIRE(r1.has_value());
  CHECK(*r1 == qp({0, -1, 0, 1}));
  CHECK(!perfect_square_root(qp({1, 0, 0, 0, 0, 0, 1})).has_value());
  QPoly g = qp({-1, 3, 0, 2});
  auto r3 = perfect_square_root(g * g);
  REQUIRE(r3.has_value());
  CHECK(*r3 == QPoly(std::vector<Rational>{Rational(Integer(-1), Integer(2)), Rational(Integer(3), Integer(2)),
                                          Rational(0), Rational(1)}));
  oracle::Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    QPoly c = rng.poly(3, 30);
    auto r = perfect_square_root(c * c);
    REQUIRE(r.has_value());
    CHECK(*r == monic(c));
    long eps = 0;
    while (eps == 0) eps = rng.range(-5, 5);
    CHECK(!perfect_square_root(c * c + QPoly::monomial(Rational(eps), 1)).has_value());
  }
}

TEST_CASE("crt_reconstruct") {
  std::vector<std::uint64_t> m{7, 11};
  std::vector<std::uint64_t> r{4, 6};
  CHECK(crt_reconstruct(r, m) == Rational(Integer(1), Integer(2)));
  CHECK(reduce_mod(Rational(Integer(1), Integer(2)), 7) == 4);
  std::vector<std::uint64_t> z{0, 0};
  CHECK(crt_reconstruct(z, m) == Rational(0));
  std::vector<std::uint64_t> m2{101, 103};
  std::vector<std::uint64_t> r2{1000000 % 101, 1000000 % 103};
  CHECK_THROWS_AS(crt_reconstruct(r2, m2), ReconstructFailed);
  PrimePool pool;
  std::uint64_t p1 = pool.next();
  std::uint64_t p2 = pool.next();
  CHECK(p1 != p2);
  CHECK(is_prime_u64(p1));
  CHECK(p1 < (std::uint64_t{1} << 63));
  PrimePool again;
  CHECK(again.next() == p1);
  Rational q(Integer("123456789012345678901234567"), Integer("98765432109876543"));
  std::vector<std::uint64_t> mods, res;
  for (int i = 0; i < 4; ++i) {
    mods.push_back(pool.next());
    res.push_back(reduce_mod(q, mods.back()));
  }
  CHECK(crt_reconstruct(res, mods) == q);
}

TEST_CASE("modular agreement") {
  oracle::Rng rng(9);
  const std::uint64_t p = 1000003;
  ModulusScope scope(p);
  auto red = [&](const QPoly& f) {
    std::vector<Fp> c;
    for (const auto& x : f.coeffs()) c.push_back(Fp::from_raw(reduce_mod(x, p)));
    return UPoly<Fp>(std::move(c));
  };
  for (int k = 0; k < 30; ++k) {
    QPoly f = rng.poly(4, 50), g = rng.poly(3, 50);
    CHECK(red(f * g) == red(f) * red(g));
    CHECK(Fp::from_raw(reduce_mod(resultant(f, g), p)) == resultant(red(f), red(g)));
    CHECK(red(gcd(f, g)) == gcd(red(f), red(g)));
    CHECK(Fp::from_raw(reduce_mod(discriminant(f), p)) == discriminant(red(f)));
  }
}

TEST_CASE("mpoly basics") {
  RingPtr r = make_ring({"x", "y", "z"});
  QMPoly u = parse_mpoly("7151648400xy^2 - 3/2*x^2*z + z^3", r);
  CHECK(u.size() == 3);
  CHECK(u.str() == "7151648400*x*y^2 - 3/2*x^2*z + z^3");
  QMPoly x = QMPoly::variable(r, 0), y = QMPoly::variable(r, 1);
  QMPoly s = (x + y) * (x - y);
  CHECK(s == x * x - y * y);
  CHECK(exact_div(s, x + y) == x - y);
  CHECK_THROWS_AS(exact_div(s, x + y + QMPoly::constant(r, 1)), ArithmeticError);
  CHECK(u.derivative(1) == parse_mpoly("14303296800xy", r));
  CHECK(u.eval(std::vector<Rational>{1, 0, 2}) == Rational(5));
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == Monomial::var(0, 2));
  Monomial a = Monomial::var(0, 2) * Monomial::var(1, 1);
  CHECK(Monomial::var(0).divides(a));
  CHECK(!Monomial::var(2).divides(a));
  CHECK(!Monomial::var(1, 2).divides(a));
  MonomialOrder lex = MonomialOrder::lex(), grevlex = MonomialOrder::degrevlex();
  CHECK(lex.compare(Monomial::var(0), Monomial::var(1, 3)) > 0);
  CHECK(grevlex.compare(Monomial::var(0), Monomial::var(1, 3)) < 0);
  // degrevlex: x*z^2 < y^3? last variable z: x z^2 has larger z-exponent, so smaller.
  CHECK(grevlex.compare(Monomial::var(0) * Monomial::var(2, 2), Monomial::var(1, 3)) < 0);
  MonomialOrder blk = MonomialOrder::block_order(1);
  CHECK(blk.compare(Monomial::var(0), Monomial::var(1, 5)) > 0);
}
