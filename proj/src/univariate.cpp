#include "sextic/univariate.hpp"

#include "sextic/crt.hpp"
#include "sextic/fp.hpp"

#include <vector>

namespace sextic {

QPoly primitive_part(const QPoly& f) {
  if (f.is_zero_poly()) return f;
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = lcm_of_denominators(c, den);
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    Integer v = c.num() * (den / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / g));
  return QPoly(std::move(out));
}

bool is_squarefree_q(const QPoly& f) {
  if (f.degree() <= 0) return true;
  const QPoly g = primitive_part(f);
  PrimePool pool(0x5f5f5f5fULL);
  for (int attempt = 0; attempt < 2; ++attempt) {
    const std::uint64_t p = pool.next();
    ModulusScope scope(p);
    std::vector<Fp> c;
    for (const auto& a : g.coeffs()) c.push_back(Fp::from_raw(mod_u64(a.num(), p)));
    UPoly<Fp> fp(std::move(c));
    if (fp.degree() != g.degree()) continue;
    if (gcd(fp, fp.derivative()).degree() == 0) return true;
  }
  return is_squarefree(g);
}

namespace {

int sign_variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_count(const QPoly& f) {
  if (f.is_zero_poly()) throw DegenerateInput("sturm_count of zero polynomial");
  if (f.degree() == 0) return 0;
  if (!is_squarefree_q(f)) throw NotSquarefree("sturm_count: input has repeated roots");
  std::vector<QPoly> seq;
  seq.push_back(primitive_part(f));
  seq.push_back(primitive_part(f.derivative()));
  while (seq.back().degree() > 0) {
    QPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.is_zero_poly()) break;
    seq.push_back(primitive_part(-r));
  }
  std::vector<int> at_minus;
  std::vector<int> at_plus;
  for (const auto& p : seq) {
    int s = p.lc().sign();
    at_plus.push_back(s);
    at_minus.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_variations(at_minus) - sign_variations(at_plus);
}

int binary_form_real_roots(const QPoly& f, int formal_degree) {
  if (f.is_zero_poly()) throw DegenerateInput("zero binary form");
  int at_infinity = formal_degree - f.degree();
  if (at_infinity < 0) throw InternalError("binary form degree exceeds its formal degree");
  if (at_infinity > 1) throw NotSquarefree("binary form has a multiple root at infinity");
  return sturm_count(f) + at_infinity;
}

}  // namespace sextic
