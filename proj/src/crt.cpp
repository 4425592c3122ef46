#include "sextic/crt.hpp"

#include "sextic/errors.hpp"
#include "sextic/fp.hpp"

namespace sextic {

namespace {

Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

// splitmix64: tiny, fully specified generator for the prime offsets.
std::uint64_t splitmix(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Integer crt_combine(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli) {
  if (residues.size() != moduli.size()) throw ArithmeticError("crt: size mismatch");
  Integer x = 0;
  Integer m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    Integer p = from_u64(moduli[i]);
    Integer r = from_u64(residues[i] % moduli[i]);
    // x' = x + m * ((r - x) * m^{-1} mod p)
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()) == 0)
      throw ArithmeticError("crt: moduli not coprime");
    Integer t = (r - x) * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    x += m * t;
    m *= p;
  }
  return x;
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m;
  Integer r1;
  mpz_fdiv_r(r1.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  Integer t0 = 0;
  Integer t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rational(r1, t1);
}

Rational crt_reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli) {
  Integer m = 1;
  for (auto p : moduli) m *= from_u64(p);
  auto q = rational_reconstruct(crt_combine(residues, moduli), m);
  if (!q) throw ReconstructFailed("rational reconstruction failed: modulus product too small");
  return *q;
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  std::uint64_t d = mod_u64(q.den(), p);
  if (d == 0) throw ArithmeticError("prime divides a denominator");
  ModulusScope scope(p);
  return (Fp::from_raw(mod_u64(q.num(), p)) / Fp::from_raw(d)).value();
}

PrimePool::PrimePool(std::uint64_t seed) : state_(seed) {}

std::uint64_t PrimePool::next(std::span<const Integer> avoid) {
  constexpr std::uint64_t top = (std::uint64_t{1} << 63) - 1;
  while (true) {
    std::uint64_t k = splitmix(state_) & ((std::uint64_t{1} << 40) - 1);
    std::uint64_t candidate = top - 2 * k;
    if (!is_prime_u64(candidate)) continue;
    bool divides = false;
    for (const auto& n : avoid) {
      if (n != 0 && mod_u64(n, candidate) == 0) {
        divides = true;
        break;
      }
    }
    if (!divides) return candidate;
  }
}

}  // namespace sextic
