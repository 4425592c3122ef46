#include "sextic/delpezzo.hpp"

#include "sextic/crt.hpp"
#include "sextic/linalg.hpp"
#include "sextic/modular.hpp"
#include "sextic/resultant.hpp"
#include "sextic/univariate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sextic {

const RingPtr& plane_ring() {
  static const RingPtr r = make_ring({"x", "y", "z"});
  return r;
}
const RingPtr& chart_ring() {
  static const RingPtr r = make_ring({"t", "W"});
  return r;
}
const RingPtr& ambient_ring() {
  static const RingPtr r = make_ring({"x0", "x1", "x2", "x3"});
  return r;
}

namespace {

Monomial tw(int i, int j) { return Monomial::var(0, i) * Monomial::var(1, j); }

// Exponent pairs (i, j) of the Newton triangle, W-degree major.
const std::vector<std::pair<int, int>>& triangle() {
  static const std::vector<std::pair<int, int>> list = [] {
    std::vector<std::pair<int, int>> l;
    for (int j = 0; j <= 3; ++j)
      for (int i = 0; i + 2 * j <= 6; ++i) l.emplace_back(i, j);
    return l;
  }();
  return list;
}

template <class F>
MPoly<F> jacobian(const MPoly<F>& u, const MPoly<F>& v, const MPoly<F>& w) {
  auto d = [](const MPoly<F>& f, int i) { return f.derivative(i); };
  return d(u, 0) * (d(v, 1) * d(w, 2) - d(v, 2) * d(w, 1)) - d(u, 1) * (d(v, 0) * d(w, 2) - d(v, 2) * d(w, 0)) +
         d(u, 2) * (d(v, 0) * d(w, 1) - d(v, 1) * d(w, 0));
}

std::string lead_signature(const std::vector<MPoly<Fp>>& basis, const RingPtr& ring) {
  std::string s;
  for (const auto& g : basis) s += g.lm().str(ring->names) + ",";
  return s;
}

std::string support_signature(const MPoly<Fp>& f) {
  std::string s;
  for (const auto& tm : f.terms()) s += tm.m.str(f.ring()->names) + ",";
  return s;
}

// Powers p^0 .. p^n.
template <class F>
std::vector<MPoly<F>> powers(const MPoly<F>& p, int n) {
  std::vector<MPoly<F>> out{MPoly<F>::constant(p.ring(), F(1))};
  for (int k = 1; k <= n; ++k) out.push_back(out.back() * p);
  return out;
}

MPoly<Fp> linear_image(const MPoly<Fp>& u, const MPoly<Fp>& v, const MPoly<Fp>& w) {
  auto up = powers(u, 6), vp = powers(v, 6), wp = powers(w, 3);
  MPoly<Fp> d = jacobian(u, v, w);
  MPoly<Fp> d2 = d * d;
  std::vector<MPoly<Fp>> cols;
  for (auto [i, j] : triangle())
    cols.push_back(up[static_cast<std::size_t>(6 - i - 2 * j)] * vp[static_cast<std::size_t>(i)] *
                   wp[static_cast<std::size_t>(j)]);
  cols.push_back(-d2);
  std::map<Monomial::Word, std::size_t> row_of;
  for (const auto& m : monomials_of_degree(3, 18)) row_of.emplace(m.bits(), row_of.size());
  Matrix<Fp> a(row_of.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& tm : cols[c].terms()) a(row_of.at(tm.m.bits()), c) = tm.c;
  auto ns = nullspace(a);
  if (ns.size() != 1) throw NotPrincipal("branch curve: the linear system has a " + std::to_string(ns.size()) +
                                         "-dimensional solution space");
  const auto& sol = ns.front();
  std::vector<Term<Fp>> terms;
  const auto& tri = triangle();
  for (std::size_t k = 0; k < tri.size(); ++k)
    if (!is_zero(sol[k])) terms.push_back({tw(tri[k].first, tri[k].second), sol[k]});
  MPoly<Fp> c = MPoly<Fp>::from_terms(chart_ring(), std::move(terms));
  Fp lead = c.coeff(tw(6, 0));
  if (is_zero(lead)) throw NotPrincipal("branch curve: coefficient of t^6 vanishes");
  return c * (Fp(1) / lead);
}


// u(x, y, 0) and v(x, y, 0) share no root: no base point lies on z = 0.
bool pencil_avoids_line_at_infinity(const QMPoly& u, const QMPoly& v) {
  auto binary = [](const QMPoly& f) {
    std::vector<Rational> c(4);
    for (const auto& tm : f.terms())
      if (tm.m[2] == 0) c[static_cast<std::size_t>(tm.m[1])] = tm.c;
    return c;
  };
  const auto a = binary(u), b = binary(v);
  std::vector<std::vector<Rational>> syl(6, std::vector<Rational>(6));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 4; ++k) {
      syl[r][r + k] = a[k];
      syl[r + 3][r + k] = b[k];
    }
  return !bareiss_determinant(std::move(syl)).is_zero();
}

// The ideal computation runs in the chart z = 1 and loses base points on z = 0,
// which then survive the colon and blow up the elimination. The shear
// z -> z + a x + b y is unimodular, so it leaves the branch curve unchanged.
std::vector<QMPoly> chart_shear(const QMPoly& u, const QMPoly& v) {
  const auto& r = plane_ring();
  const QMPoly x = QMPoly::variable(r, 0), y = QMPoly::variable(r, 1), z = QMPoly::variable(r, 2);
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b) {
      std::vector<QMPoly> images{x, y, z + x * QMPoly::constant(r, Rational(a)) + y * QMPoly::constant(r, Rational(b))};
      if (pencil_avoids_line_at_infinity(u.substitute(images), v.substitute(images))) return images;
    }
  return {x, y, z};
}

BranchCurve lift_branch(const QMPoly& u_in, const QMPoly& v_in, const QMPoly& w_in, const BranchOptions& opts,
                        bool linear, BranchStats* stats) {
  QMPoly u = u_in, v = v_in, w = w_in;
  if (!linear) {
    auto images = chart_shear(u, v);
    u = u.substitute(images);
    v = v.substitute(images);
    w = w.substitute(images);
  }
  PrimePool pool(opts.seed);
  std::vector<Integer> avoid{denominator_lcm(u), denominator_lcm(v), denominator_lcm(w)};
  ModularLifter lifter;
  BranchStats st;
  st.bases_checked = opts.check_bases && !linear;
  int failures = 0;
  std::size_t next_attempt = 3;
  for (int k = 0; k < opts.max_primes; ++k) {
    std::uint64_t p = pool.next(avoid);
    ModulusScope scope(p);
    MPoly<Fp> up = reduce_mod_p(u), vp = reduce_mod_p(v), wp = reduce_mod_p(w);
    std::string sig;
    MPoly<Fp> image;
    try {
      if (linear) {
        image = linear_image(up, vp, wp);
        sig = support_signature(image);
      } else {
        bool ok = true;
        image = branch_curve_image(up, vp, wp, opts, &sig, opts.check_bases ? &ok : nullptr);
        st.bases_ok = st.bases_ok && ok;
      }
    } catch (const NotPrincipal&) {
      ++failures;
      ++st.primes;
      // A genuinely non-principal result shows up at every prime.
      if (failures >= 3 && lifter.images() == 0) throw;
      continue;
    }
    ++st.primes;
    lifter.add(p, sig, image);
    // Lifting and exact certification get costly, so attempts are spaced geometrically.
    if (lifter.majority_size() < next_attempt) continue;
    next_attempt = std::max(next_attempt + 1, next_attempt * 3 / 2);
    auto c = lifter.try_lift(chart_ring());
    if (!c) continue;
    if (!satisfies_branch_identity(*c, u, v, w)) continue;
    st.rejected = lifter.rejected() + failures;
    st.certified = true;
    if (stats) *stats = st;
    return {*c, linear ? "linear" : "groebner"};
  }
  throw ResourceLimit("branch curve: no certified reconstruction within " + std::to_string(opts.max_primes) +
                          " primes");
}

}  // namespace

QMPoly jacobian_determinant(const QMPoly& u, const QMPoly& v, const QMPoly& w) { return jacobian(u, v, w); }

MPoly<Fp> branch_curve_image(const MPoly<Fp>& u, const MPoly<Fp>& v, const MPoly<Fp>& w, const BranchOptions& opts,
                             std::string* signature, bool* bases_ok) {
  static const RingPtr ring = make_ring({"x", "y", "t", "W"});
  using P = MPoly<Fp>;
  const std::vector<P> affine{P::variable(ring, 0), P::variable(ring, 1), P::constant(ring, Fp(1))};
  P ua = u.substitute(affine), va = v.substitute(affine), wa = w.substitute(affine);
  P det = jacobian(u, v, w).substitute(affine);
  P one = P::constant(ring, Fp(1)), t = P::variable(ring, 2), W = P::variable(ring, 3);
  std::vector<P> gens{det};
  for (auto& m : minors_2x2<Fp>({{{ua * ua, ua * va, va * va, wa}, {one, t, t * t, W}}})) gens.push_back(m);
  IdealHandle<Fp> ideal(ring, gens, opts.groebner);
  const int k = opts.colon_power;
  std::vector<P> jgens;
  for (int a = 0; a <= k; ++a) jgens.push_back(ua.pow(k - a) * va.pow(a));
  IdealHandle<Fp> q = ideal_quotient(ideal, IdealHandle<Fp>(ring, jgens, opts.groebner));
  std::vector<P> block;
  std::vector<P> elim = eliminate(q, {0, 1}, &block);
  if (bases_ok) {
    // x and y already come first, so the block ring differs from `ring` only in its order.
    std::vector<P> qgens;
    if (!block.empty())
      for (const auto& g : q.generators()) qgens.push_back(g.in_ring(block.front().ring()));
    *bases_ok = is_groebner_basis(ideal.basis()) && generators_reduce_to_zero(gens, ideal.basis()) &&
                is_groebner_basis(block) && generators_reduce_to_zero(qgens, block);
  }
  if (elim.size() != 1)
    throw NotPrincipal("branch curve: elimination ideal has " + std::to_string(elim.size()) + " generators");
  P c = elim.front().rename(chart_ring(), {0, 0, 0, 1});
  Fp lead = c.coeff(tw(6, 0));
  if (is_zero(lead)) throw NotPrincipal("branch curve: generator has no t^6 term");
  c = c * (Fp(1) / lead);
  if (signature) {
    const RingPtr& br = block.empty() ? ring : block.front().ring();
    *signature = "I:" + lead_signature(ideal.basis(), ring) + "|E:" + lead_signature(block, br) + "|c:" +
                 support_signature(c);
  }
  return c;
}

BranchCurve branch_curve(const QMPoly& u, const QMPoly& v, const QMPoly& w, const BranchOptions& opts,
                         BranchStats* stats) {
  BranchCurve bc = lift_branch(u, v, w, opts, false, stats);
  if (!newton_polygon_ok(bc.c)) throw InternalError("branch curve violates its Newton polygon");
  return bc;
}

BranchCurve branch_curve_linear(const QMPoly& u, const QMPoly& v, const QMPoly& w, BranchStats* stats) {
  return lift_branch(u, v, w, BranchOptions{}, true, stats);
}

bool satisfies_branch_identity(const QMPoly& c, const QMPoly& u, const QMPoly& v, const QMPoly& w) {
  if (!newton_polygon_ok(c) || c.is_zero_poly()) return false;
  QMPoly cz = primitive_integer(c);
  auto up = powers(u, 6), vp = powers(v, 6), wp = powers(w, 3);
  QMPoly sum(u.ring());
  for (const auto& tm : cz.terms()) {
    int i = tm.m[0], j = tm.m[1];
    sum += up[static_cast<std::size_t>(6 - i - 2 * j)] * vp[static_cast<std::size_t>(i)] *
           wp[static_cast<std::size_t>(j)] * tm.c;
  }
  QMPoly d = jacobian(u, v, w);
  QMPoly d2 = d * d;
  if (d2.is_zero_poly() || sum.is_zero_poly() || !(sum.lm() == d2.lm())) return false;
  Rational lambda = sum.lc() / d2.lc();
  return sum == d2 * lambda;
}

bool newton_polygon_ok(const QMPoly& c) {
  for (const auto& tm : c.terms())
    if (tm.m[0] + 2 * tm.m[1] > 6) return false;
  return true;
}

QMPoly monic_t6(const QMPoly& c) {
  Rational lead = c.coeff(tw(6, 0));
  if (lead.is_zero()) throw DegenerateConfiguration("branch curve has no t^6 term");
  return c * lead.inverse();
}

namespace {

template <class F>
bool smooth_certificate(const MPoly<F>& c, bool exact_degrees) {
  // Bivariate in W with coefficients in t.
  auto cw = to_bivariate(c, 1, 0);
  auto dw = to_bivariate(c.derivative(1), 1, 0);
  auto dt = to_bivariate(c.derivative(0), 1, 0);
  if (cw.degree() != 3 || dw.degree() != 2 || dt.degree() < 0) return false;
  UPoly<F> r1 = subresultant_resultant(cw, dw);
  UPoly<F> r2 = subresultant_resultant(cw, dt);
  if (r1.is_zero_poly() || r2.is_zero_poly()) return false;
  // The weighted bounds are 12 and 15; reaching one of them rules out a degree drop.
  if (!exact_degrees && r1.degree() != 12 && r2.degree() != 15) return false;
  return gcd(r1, r2).degree() == 0;
}

}  // namespace

bool is_smooth(const QMPoly& c_in) {
  QMPoly c = primitive_integer(c_in);
  if (!newton_polygon_ok(c)) return false;
  if (c.coeff(tw(0, 3)).is_zero()) return false;  // the vertex would lie on the curve
  std::vector<Rational> top{c.coeff(tw(6, 0)), c.coeff(tw(4, 1)), c.coeff(tw(2, 2)), c.coeff(tw(0, 3))};
  if (!is_squarefree(QPoly(top))) return false;
  PrimePool pool(0x5a007ULL);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::uint64_t p = pool.next();
    ModulusScope scope(p);
    MPoly<Fp> cp = reduce_mod_p(c);
    // W-degrees of c, c_W and c_t must survive the reduction.
    if (cp.degree_in(1) != 3 || cp.derivative(0).degree_in(1) != c.derivative(0).degree_in(1)) continue;
    if (to_bivariate(cp.derivative(0), 1, 0).lc().degree() != to_bivariate(c.derivative(0), 1, 0).lc().degree())
      continue;
    if (smooth_certificate(cp, false)) return true;
  }
  return smooth_certificate(c, true);
}

QMPoly w_shift(const QMPoly& c, const Rational& alpha, const Rational& beta, const Rational& gamma) {
  const RingPtr& r = chart_ring();
  QMPoly t = QMPoly::variable(r, 0), W = QMPoly::variable(r, 1);
  QMPoly shifted = W - QMPoly::constant(r, alpha) - t * beta - t * t * gamma;
  return monic_t6(c.substitute({t, shifted}));
}

AmbientPair to_ambient(const QMPoly& c) {
  const RingPtr& r = ambient_ring();
  std::vector<Term<Rational>> terms;
  for (const auto& tm : c.terms()) {
    int i = tm.m[0], j = tm.m[1];
    if (i + 2 * j > 6) throw DegenerateInput("to_ambient: monomial outside the Newton polygon");
    int q = i / 2, rr = i % 2;
    Monomial m = Monomial::var(0, 3 - q - rr - j) * Monomial::var(1, rr) * Monomial::var(2, q) * Monomial::var(3, j);
    terms.push_back({m, tm.c});
  }
  QMPoly x0 = QMPoly::variable(r, 0), x1 = QMPoly::variable(r, 1), x2 = QMPoly::variable(r, 2);
  return {x0 * x2 - x1 * x1, QMPoly::from_terms(r, std::move(terms))};
}

QMPoly restrict_to_chart(const QMPoly& f) {
  const RingPtr& r = chart_ring();
  QMPoly t = QMPoly::variable(r, 0);
  return f.substitute({QMPoly::constant(r, Rational(1)), t, t * t, QMPoly::variable(r, 1)});
}

QMPoly reduce_mod_cone(const QMPoly& f) {
  std::vector<Term<Rational>> terms;
  for (const auto& tm : f.terms()) {
    int b = tm.m[1];
    Monomial m = tm.m.with(1, b % 2);
    m = m.with(0, m[0] + b / 2).with(2, m[2] + b / 2);
    terms.push_back({m, tm.c});
  }
  return QMPoly::from_terms(f.ring(), std::move(terms));
}

AmbientPlane AmbientPlane::normalized() const {
  Integer den = 1;
  for (const auto& x : u) den = lcm_of_denominators(x, den);
  Integer g = 0;
  for (const auto& x : u) {
    Integer n = x.num() * (den / x.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) throw DegenerateInput("zero plane");
  Rational scale(den, g);
  for (const auto& x : u)
    if (!x.is_zero()) {
      if (x.sign() < 0) scale = -scale;
      break;
    }
  AmbientPlane out;
  for (std::size_t k = 0; k < 4; ++k) out.u[k] = u[k] * scale;
  return out;
}

bool AmbientPlane::proportional_to(const AmbientPlane& o) const {
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      if (!(u[a] * o.u[b] == u[b] * o.u[a])) return false;
  bool nz = false, onz = false;
  for (std::size_t k = 0; k < 4; ++k) {
    nz = nz || !u[k].is_zero();
    onz = onz || !o.u[k].is_zero();
  }
  return nz && onz;
}

std::string AmbientPlane::str() const {
  std::ostringstream os;
  os << u[0] << "," << u[1] << "," << u[2] << "," << u[3];
  return os.str();
}

AmbientPlane chart_to_ambient(const ChartPlane& h) { return {{h.e2, h.e1, Rational(1), h.e3}}; }

std::optional<ChartPlane> ambient_to_chart(const AmbientPlane& h) {
  if (h.u[2].is_zero()) return std::nullopt;
  Rational inv = h.u[2].inverse();
  return ChartPlane{h.u[1] * inv, h.u[0] * inv, h.u[3] * inv};
}

UPoly<Rational> plane_section_sextic(const QMPoly& c, const AmbientPlane& h) {
  if (h.u[3].is_zero()) throw DegenerateInput("plane_section_sextic: plane contains the vertex");
  QPoly minus_lin(std::vector<Rational>{-h.u[0], -h.u[1], -h.u[2]});
  std::vector<QPoly> wp{QPoly(Rational(1))};
  for (int j = 1; j <= 3; ++j) wp.push_back(wp.back() * minus_lin);
  std::vector<Rational> u3p{Rational(1)};
  for (int j = 1; j <= 3; ++j) u3p.push_back(u3p.back() * h.u[3]);
  QPoly f;
  for (const auto& tm : c.terms()) {
    int i = tm.m[0], j = tm.m[1];
    f += (wp[static_cast<std::size_t>(j)] * (tm.c * u3p[static_cast<std::size_t>(3 - j)])).shifted(i);
  }
  return f;
}

}  // namespace sextic
