#pragma once

#include "sextic/crt.hpp"
#include "sextic/fp.hpp"
#include "sextic/mpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sextic {

/// Image of a rational polynomial in GF(p) for the prime of the current ModulusScope.
inline MPoly<Fp> reduce_mod_p(const QMPoly& f) {
  const std::uint64_t p = Fp::modulus();
  return f.map_coeffs<Fp>([p](const Rational& q) { return Fp::from_raw(reduce_mod(q, p)); });
}

/// Least common multiple of all coefficient denominators.
inline Integer denominator_lcm(const QMPoly& f) {
  Integer acc = 1;
  for (const auto& tm : f.terms()) acc = lcm_of_denominators(tm.c, acc);
  return acc;
}

/// Primitive integer associate: clears denominators and removes the content.
/// The sign of the leading term is kept.
QMPoly primitive_integer(const QMPoly& f);

/// Lifts modular images of one rational polynomial back to Q.
///
/// Images are grouped by a caller-supplied signature (typically the leading
/// terms of every Groebner basis met on the way). Only the group with the most
/// members is used, which discards unlucky primes by majority vote.
class ModularLifter {
 public:
  void add(std::uint64_t prime, const std::string& signature, const MPoly<Fp>& image);

  /// Reconstruction from all majority images but the newest, accepted only if it
  /// also matches the newest image. Needs at least two majority images.
  std::optional<QMPoly> try_lift(const RingPtr& ring) const;

  int images() const { return total_; }
  int rejected() const;
  std::size_t majority_size() const;

 private:
  struct Image {
    std::uint64_t prime;
    std::vector<Term<Fp>> terms;  // raw residues on the group's support
  };
  const std::vector<Image>* majority() const;
  std::map<std::string, std::vector<Image>> groups_;
  std::vector<std::string> order_;
  int total_ = 0;
};

}  // namespace sextic
