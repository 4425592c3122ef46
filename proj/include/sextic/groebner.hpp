#pragma once

#include "sextic/errors.hpp"
#include "sextic/mpoly.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace sextic {

struct GroebnerOptions {
  /// Maximum number of S-polynomials reduced before ResourceLimit is raised.
  std::size_t max_pairs = 100000;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_skipped = 0;
  std::size_t zero_reductions = 0;
};

namespace detail {

/// Working polynomial for reduction: terms [start, end) of a sorted vector.
template <class F>
struct Workspace {
  std::vector<Term<F>> cur, next;
  std::size_t start = 0;
};

/// cur[start+1..] - c * m * g[1..] merged into next (the leading terms cancel).
template <class F>
void subtract_multiple(Workspace<F>& w, const MonomialOrder& ord, const MPoly<F>& g, Monomial m, const F& c) {
  const auto& gt = g.terms();
  w.next.clear();
  w.next.reserve(w.cur.size() - w.start + gt.size());
  std::size_t i = w.start + 1, j = 1;
  while (i < w.cur.size() && j < gt.size()) {
    Monomial gm = gt[j].m * m;
    int cmp = ord.compare(w.cur[i].m, gm);
    if (cmp > 0) {
      w.next.push_back(std::move(w.cur[i++]));
    } else if (cmp < 0) {
      w.next.push_back({gm, -(gt[j].c * c)});
      ++j;
    } else {
      F s = w.cur[i].c - gt[j].c * c;
      if (!is_zero(s)) w.next.push_back({gm, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < w.cur.size(); ++i) w.next.push_back(std::move(w.cur[i]));
  for (; j < gt.size(); ++j) w.next.push_back({gt[j].m * m, -(gt[j].c * c)});
  std::swap(w.cur, w.next);
  w.start = 0;
}

}  // namespace detail

/// Remainder of f on division by the (monic) reducers. With full = false, only
/// the leading term is reduced until it becomes irreducible.
template <class F>
MPoly<F> reduce(const MPoly<F>& f, const std::vector<const MPoly<F>*>& reducers, bool full = true) {
  const MonomialOrder& ord = f.ring()->order;
  detail::Workspace<F> w;
  w.cur = f.terms();
  std::vector<Term<F>> rem;
  while (w.start < w.cur.size()) {
    const Term<F>& lt = w.cur[w.start];
    const MPoly<F>* div = nullptr;
    for (const MPoly<F>* g : reducers) {
      if (g->lm().divides(lt.m)) {
        div = g;
        break;
      }
    }
    if (div == nullptr) {
      if (!full) break;
      rem.push_back(std::move(w.cur[w.start]));
      ++w.start;
      continue;
    }
    F c = div->lc() == F(1) ? lt.c : lt.c / div->lc();
    Monomial m = lt.m / div->lm();
    detail::subtract_multiple(w, ord, *div, m, c);
  }
  for (std::size_t i = w.start; i < w.cur.size(); ++i) rem.push_back(std::move(w.cur[i]));
  return MPoly<F>::from_sorted(f.ring(), std::move(rem));
}

template <class F>
MPoly<F> reduce(const MPoly<F>& f, const std::vector<MPoly<F>>& basis) {
  std::vector<const MPoly<F>*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  return reduce(f, ptrs);
}

template <class F>
MPoly<F> s_polynomial(const MPoly<F>& f, const MPoly<F>& g) {
  Monomial l = lcm(f.lm(), g.lm());
  return f.mul_term(l / f.lm(), F(1) / f.lc()) - g.mul_term(l / g.lm(), F(1) / g.lc());
}

/// Reduced Groebner basis (monic, autoreduced, sorted by leading monomial
/// ascending) by Buchberger's algorithm with the Gebauer-Moeller criteria and
/// sugar-degree pair selection.
template <class F>
std::vector<MPoly<F>> groebner_basis(std::vector<MPoly<F>> gens, const GroebnerOptions& opts = {},
                                     GroebnerStats* stats = nullptr) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const MPoly<F>& p) { return p.is_zero_poly(); }),
             gens.end());
  if (gens.empty()) return {};
  const RingPtr ring = gens.front().ring();
  const MonomialOrder& ord = ring->order;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };
  std::vector<MPoly<F>> polys;
  std::vector<int> sugar;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto reducers = [&]() {
    std::vector<const MPoly<F>*> r;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) r.push_back(&polys[k]);
    return r;
  };

  auto insert = [&](MPoly<F> h, int h_sugar) {
    h = h.monic();
    const std::size_t hi = polys.size();
    const Monomial hm = h.lm();
    polys.push_back(std::move(h));
    sugar.push_back(h_sugar);
    active.push_back(true);

    // New pairs (g, h) for active g, pruned by the chain and product criteria.
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active[g]) continue;
      Monomial gm = polys[g].lm();
      Monomial l = lcm(gm, hm);
      int s = std::max(sugar[g] + (l / gm).degree(), h_sugar + (l / hm).degree());
      fresh.push_back({g, hi, l, s});
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool coprime = polys[fresh[a].i].lm().coprime(hm);
      if (coprime) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm && b > a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      // Product criterion: coprime pairs reduce to zero; drop them after they
      // have served to prune others.
      if (polys[fresh[a].i].lm().coprime(hm)) {
        ++st.pairs_skipped;
        continue;
      }
      kept.push_back(fresh[a]);
    }
    // Old pairs whose lcm is strictly divisible by lm(h) in the GM sense.
    std::vector<Pair> old;
    old.reserve(pairs.size());
    for (const Pair& p : pairs) {
      if (hm.divides(p.lcm) && !(lcm(polys[p.i].lm(), hm) == p.lcm) && !(lcm(polys[p.j].lm(), hm) == p.lcm)) {
        ++st.pairs_skipped;
        continue;
      }
      old.push_back(p);
    }
    pairs = std::move(old);
    pairs.insert(pairs.end(), kept.begin(), kept.end());
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && hm.divides(polys[g].lm())) active[g] = false;
  };

  // Seed with interreduced generators, smallest leading monomial first.
  std::sort(gens.begin(), gens.end(), [&](const MPoly<F>& a, const MPoly<F>& b) {
    return ord.compare(a.lm(), b.lm()) < 0;
  });
  for (auto& g : gens) {
    MPoly<F> r = reduce(g, reducers());
    if (r.is_zero_poly()) continue;
    if (r.is_constant()) return {MPoly<F>::constant(ring, F(1))};
    insert(std::move(r), g.total_degree());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return ord.compare(a.lcm, b.lcm) < 0;
    });
    Pair p = *best;
    *best = pairs.back();
    pairs.pop_back();
    if (++st.pairs_reduced > opts.max_pairs)
      throw ResourceLimit("Groebner basis: S-pair budget of " + std::to_string(opts.max_pairs) + " exhausted");
    MPoly<F> s = s_polynomial(polys[p.i], polys[p.j]);
    MPoly<F> h = reduce(s, reducers());
    if (h.is_zero_poly()) {
      ++st.zero_reductions;
      continue;
    }
    if (h.is_constant()) return {MPoly<F>::constant(ring, F(1))};
    insert(std::move(h), p.sugar);
  }

  // Autoreduce the minimal basis.
  std::vector<MPoly<F>> basis;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) basis.push_back(polys[k]);
  std::sort(basis.begin(), basis.end(),
            [&](const MPoly<F>& a, const MPoly<F>& b) { return ord.compare(a.lm(), b.lm()) < 0; });
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<const MPoly<F>*> others;
    for (std::size_t l = 0; l < basis.size(); ++l)
      if (l != k) others.push_back(&basis[l]);
    MPoly<F> lead = MPoly<F>::term(ring, basis[k].lm(), F(1));
    MPoly<F> tail = basis[k] - lead;
    basis[k] = (lead + reduce(tail, others)).monic();
  }
  return basis;
}

/// Post-hoc Buchberger criterion: every S-pair reduces to zero.
template <class F>
bool is_groebner_basis(const std::vector<MPoly<F>>& g) {
  std::vector<const MPoly<F>*> ptrs;
  for (const auto& p : g) ptrs.push_back(&p);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i].lm().coprime(g[j].lm())) continue;
      if (!reduce(s_polynomial(g[i], g[j]), ptrs).is_zero_poly()) return false;
    }
  return true;
}

/// Membership of every generator: f reduces to zero modulo the basis.
template <class F>
bool generators_reduce_to_zero(const std::vector<MPoly<F>>& gens, const std::vector<MPoly<F>>& basis) {
  for (const auto& f : gens)
    if (!reduce(f, basis).is_zero_poly()) return false;
  return true;
}

/// Ideal of a polynomial ring, with a lazily cached reduced Groebner basis.
template <class F>
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<MPoly<F>> gens, GroebnerOptions opts = {})
      : ring_(std::move(ring)), gens_(std::move(gens)), opts_(opts) {
    for (auto& g : gens_)
      if (g.ring() != ring_) g = g.in_ring(ring_);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<MPoly<F>>& generators() const { return gens_; }
  const GroebnerOptions& options() const { return opts_; }

  const std::vector<MPoly<F>>& basis() const {
    if (!gb_) gb_ = groebner_basis(gens_, opts_, &stats_);
    return *gb_;
  }
  const GroebnerStats& stats() const { return stats_; }

  bool contains(const MPoly<F>& f) const { return reduce(f.in_ring(ring_), basis()).is_zero_poly(); }
  bool is_unit() const { return basis().size() == 1 && basis()[0].is_constant(); }
  bool is_zero_ideal() const { return basis().empty(); }

 private:
  RingPtr ring_;
  std::vector<MPoly<F>> gens_;
  GroebnerOptions opts_;
  mutable std::optional<std::vector<MPoly<F>>> gb_;
  mutable GroebnerStats stats_;
};

/// Generators of I intersected with the subring in the variables not in `vars`,
/// expressed in I's ring. Uses a block order with eliminated variables first;
/// the full block-order basis is stored in `block_basis` when requested.
template <class F>
std::vector<MPoly<F>> eliminate(const IdealHandle<F>& ideal, const std::vector<int>& vars,
                                std::vector<MPoly<F>>* block_basis = nullptr) {
  const Ring& r = *ideal.ring();
  const int n = r.nvars();
  std::vector<bool> elim(static_cast<std::size_t>(n), false);
  for (int v : vars) {
    if (v < 0 || v >= n) throw ArithmeticError("eliminate: variable out of range");
    elim[static_cast<std::size_t>(v)] = true;
  }
  // Permutation old -> new putting eliminated variables first, relative order kept.
  std::vector<int> to_new(static_cast<std::size_t>(n)), to_old;
  std::vector<std::string> names;
  for (int pass = 0; pass < 2; ++pass)
    for (int v = 0; v < n; ++v)
      if (elim[static_cast<std::size_t>(v)] == (pass == 0)) {
        to_new[static_cast<std::size_t>(v)] = static_cast<int>(to_old.size());
        to_old.push_back(v);
        names.push_back(r.names[static_cast<std::size_t>(v)]);
      }
  int k = 0;
  for (bool e : elim) k += e ? 1 : 0;
  RingPtr er = make_ring(names, MonomialOrder::block_order(k));
  std::vector<MPoly<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.rename(er, to_new));
  std::vector<MPoly<F>> gb = groebner_basis(gens, ideal.options());
  if (block_basis) *block_basis = gb;
  std::vector<MPoly<F>> out;
  for (const auto& g : gb) {
    bool free = true;
    for (int v = 0; v < k && free; ++v) free = !g.involves(v);
    if (free) out.push_back(g.rename(ideal.ring(), to_old));
  }
  return out;
}

/// Ring with one extra trailing variable, for intersections.
inline RingPtr with_auxiliary(const RingPtr& ring, const std::string& name = "_s") {
  std::vector<std::string> names = ring->names;
  names.push_back(name);
  return make_ring(names, ring->order);
}

/// I ∩ J via s*I + (1 - s)*J, eliminating s.
template <class F>
IdealHandle<F> intersect(const IdealHandle<F>& a, const IdealHandle<F>& b) {
  RingPtr ext = with_auxiliary(a.ring());
  const int s = ext->nvars() - 1;
  MPoly<F> sv = MPoly<F>::variable(ext, s);
  MPoly<F> one_minus = MPoly<F>::constant(ext, F(1)) - sv;
  std::vector<MPoly<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(sv * g.in_ring(ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus * g.in_ring(ext));
  IdealHandle<F> big(ext, gens, a.options());
  std::vector<MPoly<F>> in_ext = eliminate(big, {s});
  std::vector<MPoly<F>> out;
  std::vector<int> map;
  for (int v = 0; v < a.ring()->nvars(); ++v) map.push_back(v);
  map.push_back(0);  // unused: s is absent from eliminated generators
  for (const auto& g : in_ext) out.push_back(g.rename(a.ring(), map));
  return IdealHandle<F>(a.ring(), out, a.options());
}

/// I : <g> = (I ∩ <g>) / g.
template <class F>
IdealHandle<F> quotient(const IdealHandle<F>& ideal, const MPoly<F>& g) {
  if (g.is_zero_poly()) return IdealHandle<F>(ideal.ring(), {MPoly<F>::constant(ideal.ring(), F(1))}, ideal.options());
  IdealHandle<F> cap = intersect(ideal, IdealHandle<F>(ideal.ring(), {g}, ideal.options()));
  std::vector<MPoly<F>> out;
  for (const auto& h : cap.generators()) out.push_back(exact_div(h, g.in_ring(ideal.ring())));
  return IdealHandle<F>(ideal.ring(), out, ideal.options());
}

/// I : J as the intersection of the quotients by J's generators.
template <class F>
IdealHandle<F> ideal_quotient(const IdealHandle<F>& ideal, const IdealHandle<F>& j) {
  std::optional<IdealHandle<F>> acc;
  for (const auto& g : j.generators()) {
    if (g.is_zero_poly()) continue;
    IdealHandle<F> q = quotient(ideal, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return IdealHandle<F>(ideal.ring(), {MPoly<F>::constant(ideal.ring(), F(1))}, ideal.options());
  return *acc;
}

/// 2x2 minors of a 2x4 matrix in column-pair order (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
template <class F>
std::vector<MPoly<F>> minors_2x2(const std::array<std::array<MPoly<F>, 4>, 2>& m) {
  std::vector<MPoly<F>> out;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) out.push_back(m[0][a] * m[1][b] - m[0][b] * m[1][a]);
  return out;
}

}  // namespace sextic
