#include "sextic/config.hpp"

#include "sextic/errors.hpp"
#include "sextic/linear_systems.hpp"

#include <sstream>

namespace sextic {

namespace {

Gaussian cross2(const PointQi& a, const PointQi& b, int i, int j) {
  return a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] -
         a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)];
}

bool is_zero_point(const PointQi& p) { return p[0].is_zero() && p[1].is_zero() && p[2].is_zero(); }

/// Clears denominators and removes the integer content of all parts.
PointQi primitive_parts(PointQi p) {
  Integer den = 1;
  for (const auto& c : p) {
    den = lcm_of_denominators(c.re(), den);
    den = lcm_of_denominators(c.im(), den);
  }
  Integer g = 0;
  for (auto& c : p) {
    c = c * Gaussian(Rational(den));
    Integer re = c.re().num(), im = c.im().num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), im.get_mpz_t());
  }
  Rational inv(Integer(1), g);
  for (auto& c : p) c = c * Gaussian(inv);
  return p;
}

/// Scales so that the first nonzero coordinate equals 1.
PointQi affine_representative(const PointQi& p) {
  for (const auto& c : p)
    if (!c.is_zero()) {
      Gaussian inv = c.inverse();
      return {p[0] * inv, p[1] * inv, p[2] * inv};
    }
  throw DegenerateConfiguration("zero coordinate vector");
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string point_str(const PointQi& p) {
  return "(" + p[0].str() + ":" + p[1].str() + ":" + p[2].str() + ")";
}

}  // namespace

bool proportional(const PointQi& a, const PointQi& b) {
  return cross2(a, b, 0, 1).is_zero() && cross2(a, b, 0, 2).is_zero() && cross2(a, b, 1, 2).is_zero();
}

PointQi conj_point(const PointQi& p) { return {p[0].conjugate(), p[1].conjugate(), p[2].conjugate()}; }

PointQi normalize_point(const PointQi& p) {
  if (is_zero_point(p)) throw DegenerateConfiguration("zero coordinate vector");
  const bool real_coords = p[0].is_real() && p[1].is_real() && p[2].is_real();
  // Real up to scalar but given with complex coordinates: rescale to a real vector.
  if (!real_coords && proportional(p, conj_point(p))) return primitive_parts(affine_representative(p));
  return primitive_parts(p);
}

PointConfiguration PointConfiguration::make(FieldTag field, const std::array<PointQi, 8>& points) {
  PointConfiguration cfg;
  cfg.field_ = field;
  for (std::size_t i = 0; i < 8; ++i) {
    cfg.points_[i] = normalize_point(points[i]);
    if (field == FieldTag::Q)
      for (const auto& c : cfg.points_[i])
        if (!c.is_real()) throw ParseError("point " + std::to_string(i + 1) + " is not real in a Q configuration");
  }
  for (int i = 0; i < 8; ++i) {
    const PointQi cp = conj_point(cfg.point(i));
    if (proportional(cp, cfg.point(i))) {
      cfg.involution_[static_cast<std::size_t>(i)] = i;
      continue;
    }
    int found = -1;
    for (int j = 0; j < 8; ++j) {
      if (j == i || !proportional(cp, cfg.point(j))) continue;
      if (found >= 0)
        throw DegenerateConfiguration("ambiguous conjugate of point " + std::to_string(i + 1) +
                                      " (duplicate points)");
      found = j;
    }
    if (found < 0) throw ParseError("conjugate of point " + std::to_string(i + 1) + " is missing");
    cfg.involution_[static_cast<std::size_t>(i)] = found;
  }
  return cfg;
}

PointConfiguration PointConfiguration::rational(const std::array<std::array<long, 3>, 8>& points) {
  std::array<PointQi, 8> pts;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < 3; ++k) pts[i][k] = Gaussian(points[i][k]);
  return make(FieldTag::Q, pts);
}

int PointConfiguration::num_real() const {
  int n = 0;
  for (int i = 0; i < 8; ++i) n += is_real_point(i) ? 1 : 0;
  return n;
}

std::uint64_t PointConfiguration::hash() const {
  std::string s = field_ == FieldTag::Q ? "Q" : "Qi";
  for (const auto& p : points_) s += point_str(affine_representative(p));
  return fnv1a(s);
}

std::string PointConfiguration::str() const {
  std::string s = field_ == FieldTag::Q ? "Q[" : "Qi[";
  for (std::size_t i = 0; i < 8; ++i) s += (i ? " " : "") + point_str(points_[i]);
  return s + "]";
}

namespace {

std::string idx(std::initializer_list<int> is) {
  std::string s;
  for (int i : is) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
  return s;
}

/// Runs every check over F.
template <class F>
ValidationReport check_points(const Points<F>& p) {
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      const auto& a = p[static_cast<std::size_t>(i)];
      const auto& b = p[static_cast<std::size_t>(j)];
      if (is_zero(a[0] * b[1] - a[1] * b[0]) && is_zero(a[0] * b[2] - a[2] * b[0]) &&
          is_zero(a[1] * b[2] - a[2] * b[1]))
        return ValidationReport::fail("duplicate points", "P" + idx({i}) + " = P" + idx({j}));
    }
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k) {
        Matrix<F> m(3, 3);
        for (std::size_t r = 0; r < 3; ++r) {
          m(0, r) = p[static_cast<std::size_t>(i)][r];
          m(1, r) = p[static_cast<std::size_t>(j)][r];
          m(2, r) = p[static_cast<std::size_t>(k)][r];
        }
        if (rank(m) < 3) return ValidationReport::fail("collinear triple", "points " + idx({i, j, k}));
      }
  auto with = [](int degree, std::initializer_list<std::pair<int, int>> set, int rest) {
    MultiplicityAssignment ma{degree, {}};
    ma.mults.fill(rest);
    for (auto [i, m] : set) ma.mults[static_cast<std::size_t>(i)] = m;
    return ma;
  };
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (system_dimension(p, with(2, {{i, 0}, {j, 0}}, 1)) != 0)
        return ValidationReport::fail("six points on a conic", "all points except " + idx({i, j}));
  if (int d = system_dimension(p, uniform_assignment(3, 1)); d != 2)
    return ValidationReport::fail("cubic pencil dimension", "dimension " + std::to_string(d) + ", expected 2");
  if (int d = system_dimension(p, uniform_assignment(6, 2)); d != 4)
    return ValidationReport::fail("double sextic dimension", "dimension " + std::to_string(d) + ", expected 4");
  auto one = [&](const MultiplicityAssignment& ma, const std::string& what) -> ValidationReport {
    int d = system_dimension(p, ma);
    if (d != 1)
      return ValidationReport::fail("exceptional system dimension",
                                    what + " " + ma.str() + " has dimension " + std::to_string(d));
    return ValidationReport::pass();
  };
  for (int i = 0; i < 8; ++i)
    if (auto r = one(with(6, {{i, 3}}, 2), "sextic triple at P" + idx({i})); !r.ok) return r;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      if (auto r = one(with(5, {{i, 1}, {j, 1}}, 2), "quintic simple at " + idx({i, j})); !r.ok) return r;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k) {
        if (auto r = one(with(2, {{i, 0}, {j, 0}, {k, 0}}, 1), "conic avoiding " + idx({i, j, k})); !r.ok) return r;
        if (auto r = one(with(4, {{i, 2}, {j, 2}, {k, 2}}, 1), "quartic double at " + idx({i, j, k})); !r.ok)
          return r;
      }
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (i == j) continue;
      auto ma = with(3, {{i, 2}, {j, 0}}, 1);
      if (auto r = one(ma, "cubic double at P" + idx({i}) + " avoiding P" + idx({j})); !r.ok) return r;
      auto b = linear_system_basis(p, ma);
      const auto& pj = p[static_cast<std::size_t>(j)];
      if (is_zero(b[0].eval(std::vector<F>(pj.begin(), pj.end()))))
        return ValidationReport::fail("cubic through excluded point",
                                      "cubic double at P" + idx({i}) + " vanishes at P" + idx({j}));
    }
  return ValidationReport::pass();
}

}  // namespace

ValidationReport validate_configuration(const PointConfiguration& p) {
  ValidationReport modular;
  {
    ModulusScope scope(gaussian_prime());
    modular = check_points(points_mod_p(p, Fp::from_raw(gaussian_prime_sqrt_minus_one())));
  }
  if (modular.ok) return modular;
  // Every modular failure is a rank drop that may be an artifact of the prime.
  if (p.field() == FieldTag::Q) return check_points(rational_points(p));
  return check_points(gaussian_points(p));
}

}  // namespace sextic
