#include "sextic/tritangents.hpp"

#include "sextic/errors.hpp"
#include "sextic/modular.hpp"
#include "sextic/resultant.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <thread>

namespace sextic {

namespace {

using Mat3 = std::array<std::array<Rational, 3>, 3>;

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long draw(std::uint64_t& state, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(splitmix(state) % span);
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Mat3 inverse3(const Mat3& m) {
  Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det.is_zero()) throw ArithmeticError("singular coordinate change");
  Mat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t a0 = (j + 1) % 3, a1 = (j + 2) % 3, b0 = (i + 1) % 3, b1 = (i + 2) % 3;
      r[i][j] = (m[a0][b0] * m[a1][b1] - m[a0][b1] * m[a1][b0]) / det;
    }
  return r;
}

/// C(M x') with z' = 1, as a polynomial in x, y of the plane ring.
template <class F>
MPoly<F> transform_dehomogenize(const MPoly<F>& c, const Frame& fr) {
  const auto& ring = plane_ring();
  const auto x = MPoly<F>::variable(ring, 0);
  const auto y = MPoly<F>::variable(ring, 1);
  std::vector<MPoly<F>> images;
  for (std::size_t k = 0; k < 3; ++k)
    images.push_back(x * F(fr.m[k][0]) + y * F(fr.m[k][1]) + MPoly<F>::constant(ring, F(fr.m[k][2])));
  return c.substitute(images);
}

template <class F>
Gaussian to_gaussian(const F& a) {
  return Gaussian(a);
}

template <class F>
UPoly<Gaussian> poly_to_gaussian(const UPoly<F>& p) {
  std::vector<Gaussian> c;
  for (const auto& a : p.coeffs()) c.push_back(to_gaussian(a));
  return UPoly<Gaussian>(std::move(c));
}

bool squarefree(const QPoly& r) { return is_squarefree_q(r); }
bool squarefree(const UPoly<Gaussian>& r) { return is_squarefree(r); }

QPoly real_poly(const UPoly<Gaussian>& p) {
  std::vector<Rational> c;
  for (const auto& a : p.coeffs()) {
    if (!a.is_real()) throw InternalError("residual of a conjugation-stable pair is not real");
    c.push_back(a.re());
  }
  return QPoly(std::move(c));
}

/// Element of F[theta]/(m) for a monic squarefree m.
template <class F>
class Etale {
 public:
  Etale() = default;
  Etale(int n) : v_(UPoly<F>(F(n))) {}          // NOLINT(google-explicit-constructor)
  Etale(long n) : v_(UPoly<F>(F(n))) {}         // NOLINT(google-explicit-constructor)
  Etale(const F& c) : v_(UPoly<F>(c)) {}        // NOLINT(google-explicit-constructor)
  Etale(std::shared_ptr<const UPoly<F>> m, UPoly<F> v) : m_(std::move(m)), v_(std::move(v)) { reduce(); }

  static Etale theta(const std::shared_ptr<const UPoly<F>>& m) { return Etale(m, UPoly<F>::variable()); }

  bool is_zero() const { return v_.is_zero_poly(); }
  const UPoly<F>& value() const { return v_; }

  Etale& operator+=(const Etale& o) {
    adopt(o);
    v_ += o.v_;
    return *this;
  }
  Etale& operator-=(const Etale& o) {
    adopt(o);
    v_ -= o.v_;
    return *this;
  }
  Etale& operator*=(const Etale& o) {
    adopt(o);
    v_ = v_ * o.v_;
    reduce();
    return *this;
  }
  friend Etale operator+(Etale a, const Etale& b) { return a += b; }
  friend Etale operator-(Etale a, const Etale& b) { return a -= b; }
  friend Etale operator*(Etale a, const Etale& b) { return a *= b; }
  Etale operator-() const {
    Etale r = *this;
    r.v_ = -r.v_;
    return r;
  }

  /// Inverse when the element is a unit; nullopt for zero divisors.
  std::optional<Etale> inverse() const {
    if (!m_) {
      if (v_.is_zero_poly()) return std::nullopt;
      return Etale(F(1) / v_.lc());
    }
    auto x = xgcd(v_, *m_);
    if (x.g.degree() != 0) return std::nullopt;
    return Etale(m_, x.s);
  }

  /// Coordinates on 1, theta, ..., theta^(n-1).
  std::vector<F> coords(int n) const {
    std::vector<F> out;
    for (int i = 0; i < n; ++i) out.push_back(v_.coeff(i));
    return out;
  }

 private:
  void adopt(const Etale& o) {
    if (!m_) m_ = o.m_;
  }
  void reduce() {
    if (m_ && v_.degree() >= m_->degree()) v_ = rem(v_, *m_);
  }
  std::shared_ptr<const UPoly<F>> m_;
  UPoly<F> v_;
};

template <class F>
bool is_zero(const Etale<F>& e) {
  return e.is_zero();
}

/// The common root y of C1(theta, y), C2(theta, y) by Euclid in A[y].
template <class F>
std::optional<Etale<F>> fiber_solve(const UPoly<UPoly<F>>& a_in, const UPoly<UPoly<F>>& b_in,
                                    const std::shared_ptr<const UPoly<F>>& m) {
  auto lift = [&](const UPoly<UPoly<F>>& p) {
    std::vector<Etale<F>> out;
    for (const auto& c : p.coeffs()) out.push_back(Etale<F>(m, c));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
  };
  auto a = lift(a_in), b = lift(b_in);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    auto inv = b.back().inverse();
    if (!inv) return std::nullopt;
    while (a.size() >= b.size()) {
      Etale<F> f = a.back() * *inv;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
      a.pop_back();
      while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    std::swap(a, b);
  }
  if (a.size() != 2) return std::nullopt;
  auto inv = a[1].inverse();
  if (!inv) return std::nullopt;
  return -(a[0] * *inv);
}

/// The unique (up to scale) a with sum a_k X_k = 0 in the algebra of degree n.
template <class F>
std::optional<std::array<F, 4>> plane_through(const std::array<Etale<F>, 4>& x, int n) {
  Matrix<F> sys(static_cast<std::size_t>(n), 4);
  for (std::size_t k = 0; k < 4; ++k) {
    auto c = x[k].coords(n);
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r) sys(r, k) = c[r];
  }
  auto ns = nullspace(sys);
  if (ns.size() != 1) return std::nullopt;
  return std::array<F, 4>{ns[0][0], ns[0][1], ns[0][2], ns[0][3]};
}

template <class F>
AmbientPlane to_ambient_plane(const std::array<F, 4>& a) {
  Gaussian lead;
  for (const auto& c : a)
    if (!is_zero(c)) {
      lead = to_gaussian(c);
      break;
    }
  AmbientPlane h;
  for (std::size_t k = 0; k < 4; ++k) {
    Gaussian g = to_gaussian(a[k]) / lead;
    if (!g.is_real()) throw InternalError("tritangent plane is not real");
    h.u[k] = g.re();
  }
  return h.normalized();
}

template <class F>
std::array<Etale<F>, 4> ambient_point(const SexticBasis<Rational>& b, const std::array<Etale<F>, 3>& p) {
  std::vector<Etale<F>> pt(p.begin(), p.end());
  Etale<F> u = b.u.eval(pt), v = b.v.eval(pt), w = b.w.eval(pt);
  return {u * u, u * v, v * v, w};
}

std::uint64_t class_seed(const CensusContext& ctx, const TritangentClass& cls) {
  return ctx.config->hash() ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(cls.index + 1));
}

std::vector<BasePoint> base_of(const PointConfiguration& p, const TritangentClass& cls) {
  std::vector<BasePoint> out;
  for (int i : class_base_points(cls)) out.push_back({p.point(i), 1});
  return out;
}

std::array<Rational, 3> rational_point(const PointQi& p) {
  std::array<Rational, 3> r;
  for (std::size_t k = 0; k < 3; ++k) {
    if (!p[k].is_real()) throw NotConjStable("point is not real");
    r[k] = p[k].re();
  }
  return r;
}

struct ResidualSolve {
  QPoly residual;
  std::optional<AmbientPlane> plane;
  int attempts = 0;
};

/// Residual and, when requested, the plane, over F, retrying frames that fail
/// either step.
template <class F>
ResidualSolve solve_pair(const MPoly<F>& c1, const MPoly<F>& c2, const std::vector<BasePoint>& base,
                         const SexticBasis<Rational>* basis, std::uint64_t seed, int retries) {
  std::uint64_t state = seed;
  std::string last;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const Frame fr = attempt == 0 ? Frame::identity() : Frame::random(state);
    QPoly res;
    try {
      res = residual_cubic(c1, c2, base, fr);
    } catch (const GenericityFailure& e) {
      last = e.what();
      continue;
    }
    if (res.degree() != 3)
      throw WrongResidualDegree("residual has degree " + std::to_string(res.degree()) + ", expected 3");
    if (!basis) return {res, std::nullopt, attempt + 1};
    std::vector<F> mc;
    for (const auto& c : res.coeffs()) mc.push_back(F(c));
    auto m = std::make_shared<const UPoly<F>>(UPoly<F>(mc));
    auto y = fiber_solve(to_bivariate(transform_dehomogenize(c1, fr), 1, 0),
                         to_bivariate(transform_dehomogenize(c2, fr), 1, 0), m);
    if (!y) {
      last = "fiber is not a single point over the etale algebra";
      continue;
    }
    const Etale<F> th = Etale<F>::theta(m);
    std::array<Etale<F>, 3> p;
    for (std::size_t k = 0; k < 3; ++k)
      p[k] = th * Etale<F>(F(fr.m[k][0])) + *y * Etale<F>(F(fr.m[k][1])) + Etale<F>(F(fr.m[k][2]));
    auto a = plane_through(ambient_point(*basis, p), 3);
    if (!a) {
      last = "contact conditions do not determine a unique plane";
      continue;
    }
    return {res, to_ambient_plane(*a), attempt + 1};
  }
  throw GenericityFailure("no generic projection after " + std::to_string(retries) + " retries: " + last);
}

/// Plane through the three tangent directions at the triple point.
AmbientPlane tangent_cone_plane(const SexticBasis<Rational>& b, const TangentCone& cone,
                                const std::array<Rational, 3>& p) {
  auto m = std::make_shared<const QPoly>(cone.cubic);
  const Etale<Rational> th = Etale<Rational>::theta(m);
  std::array<Etale<Rational>, 3> d;
  for (std::size_t k = 0; k < 3; ++k) d[k] = th * Etale<Rational>(cone.frame.m[k][0]) + Etale<Rational>(cone.frame.m[k][1]);
  std::vector<Rational> pt(p.begin(), p.end());
  auto along = [&](const QMPoly& f) {
    Etale<Rational> s(0);
    for (std::size_t k = 0; k < 3; ++k) s += d[k] * Etale<Rational>(f.derivative(static_cast<int>(k)).eval(pt));
    return s;
  };
  Etale<Rational> a = along(b.u), bb = along(b.v), q(0);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) {
      Rational h = b.w.derivative(static_cast<int>(k)).derivative(static_cast<int>(l)).eval(pt) / Rational(2);
      if (!h.is_zero()) q += d[k] * d[l] * Etale<Rational>(h);
    }
  auto plane = plane_through<Rational>({a * a, a * bb, bb * bb, q}, 3);
  if (!plane) throw SingularSystem("tangent directions do not determine a unique plane");
  return to_ambient_plane(*plane);
}

void cross_check(const CensusContext& ctx, ClassVerdict& v) {
  if (!ctx.branch || !v.plane) return;
  const AmbientPlane& h = *v.plane;
  if (h.u[3].is_zero()) throw CrossCheckFailed(v.cls.label() + ": plane passes through the cone vertex");
  QPoly f = plane_section_sextic(*ctx.branch, h);
  auto g = perfect_square_root(f);
  if (!g) throw CrossCheckFailed(v.cls.label() + ": plane section is not a perfect square");
  v.section_real_roots = binary_form_real_roots(*g, 3);
  v.degenerate_contact = g->degree() < 2 || discriminant(*g).is_zero();
}

template <class F>
ClassVerdict residual_class(const CensusContext& ctx, const TritangentClass& cls, const MPoly<F>& c1,
                            const MPoly<F>& c2, bool with_plane) {
  ClassVerdict v;
  v.cls = cls;
  v.real = true;
  auto sol = solve_pair(c1, c2, base_of(*ctx.config, cls), with_plane ? &ctx.basis : nullptr, class_seed(ctx, cls),
                        ctx.retries);
  v.residual = sol.residual;
  v.real_contacts = sturm_count(sol.residual);
  v.plane = sol.plane;
  v.attempts = sol.attempts;
  return v;
}

ClassVerdict run_class(const CensusContext& ctx, const TritangentClass& cls, bool with_plane) {
  const PointConfiguration& p = *ctx.config;
  if (!classify_class_reality(p, cls)) {
    ClassVerdict v;
    v.cls = cls;
    return v;
  }
  if (cls.kind == ClassKind::T8) {
    auto pair = real_exceptional_pair(p, cls);
    auto pt = rational_point(p.point(cls.indices[0]));
    TangentCone cone = tangent_cone_cubic(pair.c1, pt);
    ClassVerdict v;
    v.cls = cls;
    v.real = true;
    v.residual = cone.cubic;
    v.real_contacts = sturm_count(cone.cubic);
    if (with_plane) v.plane = tangent_cone_plane(ctx.basis, cone, pt);
    return v;
  }
  if (is_swapped_pair(p, cls)) {
    auto pair = exceptional_pair(gaussian_points(p), cls);
    return residual_class<Gaussian>(ctx, cls, pair.c1, pair.c2, with_plane);
  }
  auto pair = real_exceptional_pair(p, cls);
  // Integer coefficients keep the resultant arithmetic free of rational gcds.
  return residual_class<Rational>(ctx, cls, primitive_integer(pair.c1), primitive_integer(pair.c2), with_plane);
}

}  // namespace

Frame Frame::from_matrix(const Mat3& m) { return {m, inverse3(m)}; }

Frame Frame::identity() {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = Rational(i == j ? 1 : 0);
  return {m, m};
}

Frame Frame::random(std::uint64_t& state) {
  Mat3 l = identity().m, u = identity().m;
  l[1][0] = Rational(draw(state, -20, 20));
  l[2][0] = Rational(draw(state, -20, 20));
  l[2][1] = Rational(draw(state, -20, 20));
  u[0][1] = Rational(draw(state, -20, 20));
  u[0][2] = Rational(draw(state, -20, 20));
  u[1][2] = Rational(draw(state, -20, 20));
  return from_matrix(multiply(l, u));
}

template <class F>
QPoly residual_cubic(const MPoly<F>& c1, const MPoly<F>& c2, const std::vector<BasePoint>& base, const Frame& frame) {
  const int d1 = c1.total_degree(), d2 = c2.total_degree();
  auto a = to_bivariate(transform_dehomogenize(c1, frame), 1, 0);
  auto b = to_bivariate(transform_dehomogenize(c2, frame), 1, 0);
  if (a.degree() != d1 || a.lc().degree() != 0 || b.degree() != d2 || b.lc().degree() != 0)
    throw ProjectionDegenerate("projection centre lies on a curve");
  UPoly<F> r = resultant(a, b);
  if (r.degree() != d1 * d2) throw ProjectionDegenerate("intersection point on the line at infinity");
  if (!squarefree(r)) throw ProjectionDegenerate("two intersection points share a projection");
  UPoly<Gaussian> bf(Gaussian(1));
  for (const auto& bp : base) {
    std::array<Gaussian, 3> q;
    for (std::size_t i = 0; i < 3; ++i) {
      Gaussian s(0);
      for (std::size_t k = 0; k < 3; ++k) s += Gaussian(frame.inv[i][k]) * bp.point[k];
      q[i] = s;
    }
    if (q[2].is_zero()) throw ProjectionDegenerate("base point on the line at infinity");
    UPoly<Gaussian> lin(std::vector<Gaussian>{-(q[0] / q[2]), Gaussian(1)});
    for (int e = 0; e < bp.multiplicity; ++e) bf = bf * lin;
  }
  auto [quo, rest] = divmod(poly_to_gaussian(r), bf);
  if (!rest.is_zero_poly()) throw WrongResidualDegree("base factors do not divide the resultant");
  return real_poly(monic(quo));
}

template <class F>
QPoly residual_cubic_retry(const MPoly<F>& c1, const MPoly<F>& c2, const std::vector<BasePoint>& base,
                           std::uint64_t seed, int retries, Frame* used) {
  std::uint64_t state = seed;
  std::string last;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const Frame fr = attempt == 0 ? Frame::identity() : Frame::random(state);
    try {
      QPoly r = residual_cubic(c1, c2, base, fr);
      if (used) *used = fr;
      return r;
    } catch (const GenericityFailure& e) {
      last = e.what();
    }
  }
  throw GenericityFailure("no generic projection after " + std::to_string(retries) + " retries: " + last);
}

template QPoly residual_cubic<Rational>(const QMPoly&, const QMPoly&, const std::vector<BasePoint>&, const Frame&);
template QPoly residual_cubic<Gaussian>(const MPoly<Gaussian>&, const MPoly<Gaussian>&, const std::vector<BasePoint>&,
                                        const Frame&);
template QPoly residual_cubic_retry<Rational>(const QMPoly&, const QMPoly&, const std::vector<BasePoint>&,
                                              std::uint64_t, int, Frame*);
template QPoly residual_cubic_retry<Gaussian>(const MPoly<Gaussian>&, const MPoly<Gaussian>&,
                                              const std::vector<BasePoint>&, std::uint64_t, int, Frame*);

TangentCone tangent_cone_cubic(const QMPoly& sextic, const std::array<Rational, 3>& p) {
  int k = -1;
  for (int i = 2; i >= 0; --i)
    if (!p[static_cast<std::size_t>(i)].is_zero()) {
      k = i;
      break;
    }
  if (k < 0) throw DegenerateInput("zero point");
  std::array<std::size_t, 2> others{};
  for (std::size_t i = 0, n = 0; i < 3; ++i)
    if (static_cast<int>(i) != k) others[n++] = i;
  const long shears[] = {0, 1, -1, 2, -2, 3, -3, 5, -5};
  for (long r : shears) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      m[i][0] = Rational(i == others[0] ? 1 : 0) + Rational(i == others[1] ? r : 0);
      m[i][1] = Rational(i == others[1] ? 1 : 0);
      m[i][2] = p[i];
    }
    Frame fr = Frame::from_matrix(m);
    QMPoly s = transform_dehomogenize(sextic, fr);
    std::vector<Rational> cubic(4, Rational(0));
    for (const auto& tm : s.terms()) {
      if (tm.m.degree() < 3) throw NotTriplePoint("the sextic has multiplicity below 3 at the point");
      if (tm.m.degree() == 3) cubic[static_cast<std::size_t>(tm.m[0])] += tm.c;
    }
    QPoly t(cubic);
    if (t.is_zero_poly()) throw NotTriplePoint("the sextic has multiplicity above 3 at the point");
    if (t.degree() != 3) continue;
    if (!is_squarefree(t)) throw NotTriplePoint("the triple point is not ordinary");
    return {monic(t), fr};
  }
  throw GenericityFailure("tangent cone vanishes at every tried direction");
}

CensusContext make_context(const PointConfiguration& p, const CensusOptions& opts) {
  CensusContext ctx;
  ctx.config = &p;
  ctx.basis = opts.basis ? *opts.basis : integral_basis(real_sextic_basis(p));
  ctx.retries = opts.retries;
  if (opts.branch)
    ctx.branch = *opts.branch;
  else if (opts.planes && opts.cross_check)
    ctx.branch = branch_curve_linear(ctx.basis.u, ctx.basis.v, ctx.basis.w).c;
  return ctx;
}

ClassVerdict contact_reality(const CensusContext& ctx, const TritangentClass& cls) {
  return run_class(ctx, cls, false);
}

ClassVerdict tritangent_plane(const CensusContext& ctx, const TritangentClass& cls) {
  ClassVerdict v = run_class(ctx, cls, true);
  cross_check(ctx, v);
  return v;
}

AmbientPlane plane_from_product(const CensusContext& ctx, const TritangentClass& cls) {
  const PointConfiguration& p = *ctx.config;
  if (!classify_class_reality(p, cls)) throw NotConjStable(cls.label() + " is not real");
  QMPoly target;
  if (is_swapped_pair(p, cls)) {
    auto pair = exceptional_pair(gaussian_points(p), cls);
    target = to_rational_form(pair.c1 * pair.c2);
  } else {
    auto pair = real_exceptional_pair(p, cls);
    target = cls.kind == ClassKind::T8 ? pair.c1 : pair.c1 * pair.c2;
  }
  const auto& b = ctx.basis;
  std::vector<std::vector<Rational>> cols{coefficients_of_form(b.u * b.u, 6), coefficients_of_form(b.u * b.v, 6),
                                          coefficients_of_form(b.v * b.v, 6), coefficients_of_form(b.w, 6),
                                          coefficients_of_form(target, 6)};
  Matrix<Rational> m(cols[0].size(), 5);
  for (std::size_t r = 0; r < cols[0].size(); ++r)
    for (std::size_t c = 0; c < 5; ++c) m(r, c) = cols[c][r];
  auto ns = nullspace(m);
  if (ns.size() != 1 || ns[0][4].is_zero()) throw SingularSystem("curve pair is not in the double sextic system");
  AmbientPlane h;
  for (std::size_t k = 0; k < 4; ++k) h.u[k] = ns[0][k];
  return h.normalized();
}

CensusReport census(const PointConfiguration& p, const CensusOptions& opts) {
  const CensusContext ctx = make_context(p, opts);
  const auto& classes = all_classes();
  std::vector<ClassVerdict> verdicts(classes.size());
  std::vector<std::exception_ptr> errors(classes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < classes.size(); i = next++) {
      try {
        verdicts[i] = opts.planes ? tritangent_plane(ctx, classes[i]) : contact_reality(ctx, classes[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  CensusReport rep;
  rep.s = p.s();
  for (const auto& v : verdicts) {
    rep.n_real += v.real ? 1 : 0;
    rep.n_totally_real += v.real_contacts == 3 ? 1 : 0;
  }
  rep.classes = std::move(verdicts);
  rep.basis = ctx.basis;
  rep.branch = ctx.branch;
  return rep;
}

PointConfiguration random_configuration(const SamplerSpec& spec, std::uint64_t& state) {
  if (spec.s < 1 || spec.s > 5) throw DegenerateInput("s must lie in 1..5");
  const long h = spec.height;
  std::array<PointQi, 8> pts;
  std::size_t n = 0;
  const int n_real = 2 * spec.s - 2;
  for (int i = 0; i < n_real; ++i) {
    PointQi p;
    for (auto& c : p) c = Gaussian(draw(state, -h, h));
    pts[n++] = p;
  }
  for (int i = 0; i < 5 - spec.s; ++i) {
    PointQi p;
    for (auto& c : p) c = Gaussian(Rational(draw(state, -h, h)), Rational(draw(state, -h, h)));
    pts[n++] = p;
    pts[n++] = conj_point(p);
  }
  return PointConfiguration::make(spec.s == 5 ? FieldTag::Q : FieldTag::Qi, pts);
}

SearchResult search(const SamplerSpec& spec, int count, std::uint64_t seed, int jobs) {
  SearchResult out;
  std::uint64_t state = seed;
  std::vector<std::optional<PointConfiguration>> draws;
  for (int k = 0; k < count; ++k) {
    try {
      auto cfg = random_configuration(spec, state);
      if (cfg.s() != spec.s) throw DegenerateConfiguration("sample has a real point in a conjugate pair");
      auto rep = validate_configuration(cfg);
      if (!rep.ok) throw DegenerateConfiguration(rep.condition + ": " + rep.detail);
      draws.emplace_back(cfg);
    } catch (const Error& e) {
      draws.emplace_back(std::nullopt);
      out.rejection_log.push_back("sample " + std::to_string(k) + ": " + e.what());
    }
  }
  std::vector<std::optional<SearchSample>> results(draws.size());
  std::vector<std::string> failures(draws.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < draws.size(); i = next++) {
      if (!draws[i]) continue;
      try {
        auto rep = census(*draws[i]);
        results[i] = SearchSample{static_cast<int>(i), *draws[i], rep.n_real, rep.n_totally_real};
      } catch (const Error& e) {
        failures[i] = e.what();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<std::string> log = std::move(out.rejection_log);
  out.rejection_log.clear();
  std::size_t li = 0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    if (!draws[i]) {
      out.rejection_log.push_back(log[li++]);
      ++out.rejected;
    } else if (!results[i]) {
      out.rejection_log.push_back("sample " + std::to_string(i) + ": " + failures[i]);
      ++out.rejected;
    } else {
      out.histogram[static_cast<std::size_t>(results[i]->n_totally_real)]++;
      out.samples.push_back(std::move(*results[i]));
    }
  }
  return out;
}

}  // namespace sextic
