#pragma once

#include "sextic/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sextic {

/// Chinese remaindering: the unique x in [0, prod m_i) with x = r_i mod m_i.
Integer crt_combine(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli);

/// Rational reconstruction of a mod m with |num|, den <= floor(sqrt(m / 2)).
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

/// CRT followed by rational reconstruction. Throws ReconstructFailed when the
/// modulus product is too small to determine the rational.
Rational crt_reconstruct(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli);

/// Residue of a rational modulo p; throws ArithmeticError if p divides the denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

/// Deterministic supply of primes just below 2^63.
///
/// Candidates are 2^63 - 1 - 2k for offsets k drawn from a fixed-seed generator,
/// so the sequence is identical on every run and platform.
class PrimePool {
 public:
  explicit PrimePool(std::uint64_t seed = 0x5eed2018ULL);

  /// Next prime of the sequence that divides none of the given integers.
  std::uint64_t next(std::span<const Integer> avoid = {});

 private:
  std::uint64_t state_;
};

}  // namespace sextic
