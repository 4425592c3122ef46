#include "sextic/linear_systems.hpp"

#include "sextic/crt.hpp"

namespace sextic {

std::string MultiplicityAssignment::str() const {
  std::string s = "(d=" + std::to_string(degree) + "; m=";
  for (std::size_t i = 0; i < 8; ++i) s += (i ? "," : "") + std::to_string(mults[i]);
  return s + ")";
}

Points<Rational> rational_points(const PointConfiguration& p) {
  Points<Rational> out;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      const Gaussian& c = p.points()[i][k];
      if (!c.is_real()) throw NotConjStable("point " + std::to_string(i + 1) + " is not real");
      out[i][k] = c.re();
    }
  return out;
}

Points<Gaussian> gaussian_points(const PointConfiguration& p) { return p.points(); }

Fp gaussian_mod_p(const Gaussian& g, const Fp& sqrt_minus_one) {
  const std::uint64_t p = Fp::modulus();
  return Fp::from_raw(reduce_mod(g.re(), p)) + Fp::from_raw(reduce_mod(g.im(), p)) * sqrt_minus_one;
}

Points<Fp> points_mod_p(const PointConfiguration& p, const Fp& sqrt_minus_one) {
  Points<Fp> out;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < 3; ++k) out[i][k] = gaussian_mod_p(p.points()[i][k], sqrt_minus_one);
  return out;
}

namespace {

struct GaussianPrime {
  std::uint64_t p = 0;
  std::uint64_t root = 0;
};

const GaussianPrime& gaussian_prime_data() {
  static const GaussianPrime data = [] {
    GaussianPrime g;
    std::uint64_t p = (1ULL << 62) - 3;  // 1 mod 4
    while (!is_prime_u64(p)) p -= 4;
    g.p = p;
    ModulusScope scope(p);
    for (long long c = 2;; ++c) {
      Fp r = Fp(c).pow((p - 1) / 4);
      if (r * r == Fp(-1)) {
        g.root = r.value();
        break;
      }
    }
    return g;
  }();
  return data;
}

}  // namespace

std::uint64_t gaussian_prime() { return gaussian_prime_data().p; }
std::uint64_t gaussian_prime_sqrt_minus_one() { return gaussian_prime_data().root; }

bool is_real_form(const MPoly<Gaussian>& f) {
  for (const auto& tm : f.terms())
    if (!tm.c.is_real()) return false;
  return true;
}

QMPoly to_rational_form(const MPoly<Gaussian>& f) {
  if (!is_real_form(f)) throw NotConjStable("form has non-real coefficients");
  return f.map_coeffs<Rational>([](const Gaussian& g) { return g.re(); });
}

MPoly<Gaussian> to_gaussian_form(const QMPoly& f) {
  return f.map_coeffs<Gaussian>([](const Rational& r) { return Gaussian(r); });
}

MPoly<Gaussian> conj_form(const MPoly<Gaussian>& f) {
  return f.map_coeffs<Gaussian>([](const Gaussian& g) { return g.conjugate(); });
}

std::vector<QMPoly> real_basis(const std::vector<MPoly<Gaussian>>& system, int degree) {
  std::vector<std::vector<Rational>> parts;
  for (const auto& b : system) {
    auto coeffs = coefficients_of_form(b, degree);
    std::vector<Rational> re, im;
    for (const auto& c : coeffs) {
      re.push_back(c.re());
      im.push_back(c.im());
    }
    parts.push_back(std::move(re));
    parts.push_back(std::move(im));
  }
  auto basis = echelon_basis(parts);
  if (basis.size() != system.size())
    throw NotConjStable("real and imaginary parts span dimension " + std::to_string(basis.size()) + ", expected " +
                        std::to_string(system.size()));
  std::vector<QMPoly> out;
  for (const auto& v : basis) out.push_back(form_from_coefficients(v, degree));
  return out;
}

}  // namespace sextic
