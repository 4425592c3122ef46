#include "sextic/modular.hpp"

#include <algorithm>

namespace sextic {

QMPoly primitive_integer(const QMPoly& f) {
  if (f.is_zero_poly()) return f;
  Integer den = denominator_lcm(f);
  Integer g = 0;
  for (const auto& tm : f.terms()) {
    Integer n = tm.c.num() * (den / tm.c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den, g);
  return f * scale;
}

void ModularLifter::add(std::uint64_t prime, const std::string& signature, const MPoly<Fp>& image) {
  auto [it, inserted] = groups_.try_emplace(signature);
  if (inserted) order_.push_back(signature);
  it->second.push_back({prime, image.terms()});
  ++total_;
}

const std::vector<ModularLifter::Image>* ModularLifter::majority() const {
  const std::vector<Image>* best = nullptr;
  // Ties go to the signature seen first, so the choice is deterministic.
  for (const auto& s : order_) {
    const auto& g = groups_.at(s);
    if (!best || g.size() > best->size()) best = &g;
  }
  return best;
}

std::size_t ModularLifter::majority_size() const {
  const auto* m = majority();
  return m ? m->size() : 0;
}

int ModularLifter::rejected() const { return total_ - static_cast<int>(majority_size()); }

std::optional<QMPoly> ModularLifter::try_lift(const RingPtr& ring) const {
  const auto* group = majority();
  if (!group || group->size() < 2) return std::nullopt;
  const std::size_t n = group->size() - 1;
  const auto& support = group->front().terms;
  std::vector<std::uint64_t> moduli;
  for (std::size_t k = 0; k < n; ++k) moduli.push_back((*group)[k].prime);
  Integer m = 1;
  for (auto p : moduli) {
    Integer pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    m *= pz;
  }
  std::vector<Term<Rational>> terms;
  for (std::size_t t = 0; t < support.size(); ++t) {
    std::vector<std::uint64_t> residues;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& img = (*group)[k].terms;
      if (img.size() != support.size() || !(img[t].m == support[t].m)) return std::nullopt;
      residues.push_back(img[t].c.value());
    }
    auto q = rational_reconstruct(crt_combine(residues, moduli), m);
    if (!q) return std::nullopt;
    terms.push_back({support[t].m, *q});
  }
  QMPoly lifted = QMPoly::from_terms(ring, std::move(terms));
  const Image& check = group->back();
  ModulusScope scope(check.prime);
  MPoly<Fp> img;
  try {
    img = reduce_mod_p(lifted);
  } catch (const ArithmeticError&) {
    return std::nullopt;
  }
  if (img.terms().size() != check.terms.size()) return std::nullopt;
  for (std::size_t t = 0; t < check.terms.size(); ++t)
    if (!(img.terms()[t].m == check.terms[t].m) || !(img.terms()[t].c == check.terms[t].c)) return std::nullopt;
  return lifted;
}

}  // namespace sextic
