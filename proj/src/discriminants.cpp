#include "sextic/discriminants.hpp"

#include "sextic/errors.hpp"
#include "sextic/resultant.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <thread>

namespace sextic {

std::pair<long long, long long> delta1_bidegree(long long d, long long e) {
  return {e * (3 * d * d + 2 * d * e + e * e - 8 * d - 4 * e + 6),
          d * (d * d + 2 * d * e + 3 * e * e - 4 * d - 8 * e + 6)};
}

std::pair<long long, long long> pullback_bidegree(const DivisorClass& d) {
  return {4 * d.lambda - 33 * d.delta0, 4 * d.lambda - 34 * d.delta0};
}

ParametricConfig ParametricConfig::standard() {
  ParametricConfig pc;
  pc.points = {{{24, -23, 57}, {11, 25, -27}, {-30, 29, 79}, {14, -23, 26},
                {43, 92, 61}, {-34, 81, 7}, {88, 29, 69}, {0, 0, 0}}};
  return pc;
}

Points<Fp> ParametricConfig::specialize(const Fp& alpha) const {
  Points<Fp> out;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t k = 0; k < 3; ++k)
      out[i][k] = static_cast<int>(i) == moving_index ? Fp(line_base[k]) + alpha * Fp(line_dir[k])
                                                      : Fp(points[i][k]);
  return out;
}

MovingRole parse_moving_role(const std::string& s) {
  if (s == "distinguished") return MovingRole::Distinguished;
  if (s == "other") return MovingRole::Other;
  throw ParseError("unknown moving role '" + s + "' (expected distinguished or other)");
}

std::string moving_role_name(MovingRole r) { return r == MovingRole::Distinguished ? "distinguished" : "other"; }

const TritangentClass& class_for_role(ClassKind kind, MovingRole role, int moving_index) {
  if (moving_index < 0 || moving_index > 7) throw DegenerateInput("moving index out of range");
  const std::size_t size = kind == ClassKind::T8 ? 1 : kind == ClassKind::T56 ? 3 : 2;
  // Distinguished: the class indices end with the moving point; other: they
  // are the first indices not containing it.
  std::vector<int> idx;
  if (role == MovingRole::Distinguished) {
    for (int i = 0; i < 8 && idx.size() + 1 < size; ++i)
      if (i != moving_index) idx.push_back(i);
    idx.push_back(moving_index);
  } else {
    for (int i = 0; i < 8 && idx.size() < size; ++i)
      if (i != moving_index) idx.push_back(i);
  }
  return find_class(kind, idx);
}

int expected_disc_degree(ClassKind kind, MovingRole role) {
  const bool d = role == MovingRole::Distinguished;
  switch (kind) {
    case ClassKind::T8: return d ? 54 : 36;
    case ClassKind::T28: return d ? 18 : 30;
    case ClassKind::T56: return d ? 24 : 18;
    case ClassKind::T56_2: return 18;
  }
  return 0;
}

int expected_total_degree(ClassKind kind) {
  auto e = [&](MovingRole r) { return expected_disc_degree(kind, r); };
  switch (kind) {
    case ClassKind::T8: return e(MovingRole::Distinguished) + 7 * e(MovingRole::Other);
    case ClassKind::T28: return 2 * e(MovingRole::Distinguished) + 6 * e(MovingRole::Other);
    case ClassKind::T56: return 3 * e(MovingRole::Distinguished) + 5 * e(MovingRole::Other);
    case ClassKind::T56_2: return 8 * e(MovingRole::Distinguished);
  }
  return 0;
}

namespace {

using FMat3 = std::array<std::array<Fp, 3>, 3>;

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long draw(std::uint64_t& state) { return static_cast<long>(splitmix(state) % 41) - 20; }

Fp det3(const FMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::optional<FMat3> inverse3(const FMat3& m) {
  Fp det = det3(m);
  if (det.is_zero()) return std::nullopt;
  FMat3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t a0 = (j + 1) % 3, a1 = (j + 2) % 3, b0 = (i + 1) % 3, b1 = (i + 2) % 3;
      r[i][j] = (m[a0][b0] * m[a1][b1] - m[a0][b1] * m[a1][b0]) / det;
    }
  return r;
}

/// Unit lower times unit upper triangular, entries in [-20, 20].
FMat3 random_frame(std::uint64_t& state) {
  FMat3 l{}, u{}, r{};
  for (std::size_t i = 0; i < 3; ++i) {
    l[i][i] = u[i][i] = Fp(1);
    for (std::size_t j = 0; j < i; ++j) l[i][j] = Fp(draw(state));
    for (std::size_t j = i + 1; j < 3; ++j) u[i][j] = Fp(draw(state));
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i][j] += l[i][k] * u[k][j];
  return r;
}

/// C(M x') with z' = 1.
MPoly<Fp> transform(const MPoly<Fp>& c, const FMat3& m) {
  const auto& ring = plane_ring();
  const auto x = MPoly<Fp>::variable(ring, 0), y = MPoly<Fp>::variable(ring, 1);
  std::vector<MPoly<Fp>> images;
  for (std::size_t k = 0; k < 3; ++k)
    images.push_back(x * m[k][0] + y * m[k][1] + MPoly<Fp>::constant(ring, m[k][2]));
  return c.substitute(images);
}

/// A named polynomial condition on the points; general position needs it nonzero.
struct Condition {
  std::string name;
  std::vector<int> points;
  bool involves_all = false;
  Matrix<Fp> (*matrix)(const Points<Fp>&, const std::vector<int>&);
};

Matrix<Fp> collinear_matrix(const Points<Fp>& p, const std::vector<int>& idx) {
  Matrix<Fp> m(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = p[static_cast<std::size_t>(idx[r])][c];
  return m;
}

Matrix<Fp> conic_matrix(const Points<Fp>& p, const std::vector<int>& idx) {
  MultiplicityAssignment ma{2, {}};
  for (int i : idx) ma.mults[static_cast<std::size_t>(i)] = 1;
  return condition_matrix(p, ma);
}

Matrix<Fp> nodal_cubic_matrix(const Points<Fp>& p, const std::vector<int>& idx) {
  auto ma = uniform_assignment(3, 1);
  ma.mults[static_cast<std::size_t>(idx[0])] = 2;
  return condition_matrix(p, ma);
}

/// Three collinear, six on a conic, or a cubic through all eight singular at one.
const std::vector<Condition>& general_position_conditions() {
  static const std::vector<Condition> conds = [] {
    std::vector<Condition> out;
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        for (int k = j + 1; k < 8; ++k) out.push_back({"collinear", {i, j, k}, false, collinear_matrix});
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j) {
        std::vector<int> six;
        for (int k = 0; k < 8; ++k)
          if (k != i && k != j) six.push_back(k);
        out.push_back({"six on a conic", six, false, conic_matrix});
      }
    for (int i = 0; i < 8; ++i) out.push_back({"cubic through all singular at", {i}, true, nodal_cubic_matrix});
    return out;
  }();
  return conds;
}

Fp determinant(const Matrix<Fp>& m) {
  std::vector<std::vector<Fp>> rows(m.rows(), std::vector<Fp>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  return bareiss_determinant(std::move(rows));
}

std::string describe(const Condition& c) {
  std::string s = c.name + " ";
  for (std::size_t k = 0; k < c.points.size(); ++k) s += (k ? "," : "P") + std::to_string(c.points[k] + 1);
  return s;
}

void check_general_position(const Points<Fp>& p) {
  for (const auto& c : general_position_conditions())
    if (determinant(c.matrix(p, c.points)).is_zero()) throw SpecializationDegenerate(describe(c));
}

Fp monic_disc(const FpPoly& r) {
  if (r.degree() != 3) throw ProjectionDegenerate("residual is not a cubic");
  return discriminant(monic(r));
}

Fp pair_disc(const ExceptionalPair<Fp>& pair, const Points<Fp>& pts, const FMat3& m) {
  auto minv = inverse3(m);
  if (!minv) throw ProjectionDegenerate("singular frame");
  auto b1 = to_bivariate(transform(pair.c1, m), 1, 0);
  auto b2 = to_bivariate(transform(pair.c2, m), 1, 0);
  const int d1 = pair.c1.total_degree(), d2 = pair.c2.total_degree();
  if (b1.degree() != d1 || b2.degree() != d2 || b1.lc().degree() != 0 || b2.lc().degree() != 0)
    throw ProjectionDegenerate("curve has a point at infinity on the projection axis");
  FpPoly r = resultant(b1, b2);
  if (r.degree() != d1 * d2) throw ProjectionDegenerate("intersection point at infinity");
  for (int i : pair.base_points) {
    const auto& pt = pts[static_cast<std::size_t>(i)];
    Fp xs(0), zs(0);
    for (std::size_t k = 0; k < 3; ++k) {
      xs += (*minv)[0][k] * pt[k];
      zs += (*minv)[2][k] * pt[k];
    }
    if (zs.is_zero()) throw ProjectionDegenerate("base point at infinity");
    auto [q, rm] = divmod(r, FpPoly(std::vector<Fp>{-(xs / zs), Fp(1)}));
    if (!rm.is_zero_poly()) throw SpecializationDegenerate("curves are tangent at a base point");
    r = std::move(q);
  }
  return monic_disc(r);
}

Fp cone_disc(const MPoly<Fp>& sextic, const PointF<Fp>& p, std::uint64_t& state) {
  FMat3 m{};
  for (int attempt = 0; attempt < 16; ++attempt) {
    for (std::size_t r = 0; r < 3; ++r) {
      m[r][0] = Fp(draw(state));
      m[r][1] = Fp(draw(state));
      m[r][2] = p[r];
    }
    if (!det3(m).is_zero()) break;
  }
  if (det3(m).is_zero()) throw ProjectionDegenerate("no frame at the triple point");
  std::vector<Fp> cubic(4, Fp(0));
  for (const auto& tm : transform(sextic, m).terms()) {
    const int deg = tm.m[0] + tm.m[1];
    if (deg < 3) throw SpecializationDegenerate("sextic is not triple at its point");
    if (deg == 3) cubic[static_cast<std::size_t>(tm.m[0])] += tm.c;
  }
  return monic_disc(FpPoly(std::move(cubic)));
}

}  // namespace

Fp disc_value(const ParametricConfig& pc, const TritangentClass& cls, const Fp& alpha, std::uint64_t frame_seed) {
  const auto pts = pc.specialize(alpha);
  check_general_position(pts);
  ExceptionalPair<Fp> pair;
  try {
    pair = exceptional_pair(pts, cls);
  } catch (const UnexpectedDimension& e) {
    throw SpecializationDegenerate(e.what());
  } catch (const NonGenericVanishing& e) {
    throw SpecializationDegenerate(e.what());
  }
  std::uint64_t state = frame_seed * 0x2545f4914f6cdd1dULL + static_cast<std::uint64_t>(cls.index);
  if (pair.tangent_cone) return cone_disc(pair.c1, pts[static_cast<std::size_t>(cls.indices[0])], state);
  return pair_disc(pair, pts, random_frame(state));
}

Fp FpRationalFunction::eval(const Fp& x) const {
  Fp d = den.eval(x);
  if (d.is_zero()) throw ArithmeticError("pole of the rational function");
  return num.eval(x) / d;
}

FpPoly interpolate_polynomial(const std::vector<Fp>& xs, const std::vector<Fp>& ys) {
  const std::size_t n = xs.size();
  std::vector<Fp> dd(ys);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  FpPoly acc;
  for (std::size_t i = n; i-- > 0;) acc = acc * FpPoly(std::vector<Fp>{-xs[i], Fp(1)}) + FpPoly(dd[i]);
  return acc;
}

FpRationalFunction cauchy_interpolate(const std::vector<Fp>& xs, const std::vector<Fp>& ys,
                                      const std::vector<Fp>& held_x, const std::vector<Fp>& held_y,
                                      int degree_bound) {
  if (xs.size() != ys.size() || held_x.size() != held_y.size()) throw DegenerateInput("sample size mismatch");
  FpPoly modulus(Fp(1));
  for (const auto& x : xs) modulus *= FpPoly(std::vector<Fp>{-x, Fp(1)});
  // Every remainder step r = t L mod M is a candidate r / t.
  FpPoly r0 = modulus, r1 = interpolate_polynomial(xs, ys), t0, t1(Fp(1));
  auto accept = [&](const FpPoly& r, const FpPoly& t) -> std::optional<FpRationalFunction> {
    if (t.is_zero_poly() || r.degree() + t.degree() > degree_bound) return std::nullopt;
    for (std::size_t k = 0; k < held_x.size(); ++k) {
      Fp d = t.eval(held_x[k]);
      if (d.is_zero() || !(r.eval(held_x[k]) == held_y[k] * d)) return std::nullopt;
    }
    for (const auto& x : xs)
      if (t.eval(x).is_zero()) return std::nullopt;
    FpPoly g = gcd(r, t);
    FpPoly num = exact_div(r, g), den = exact_div(t, g);
    Fp s = Fp(1) / den.lc();
    return FpRationalFunction{num * s, den * s};
  };
  while (true) {
    if (auto f = accept(r1, t1)) return *f;
    if (r1.is_zero_poly()) break;
    auto [q, r2] = divmod(r0, r1);
    FpPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
    if (t1.degree() > degree_bound) break;
  }
  throw InterpolationUnstable("no rational function of total degree <= " + std::to_string(degree_bound) +
                              " reproduces the held-out evaluations");
}

namespace {

struct Sample {
  std::uint64_t alpha = 0;
  enum { Good, Excluded, FrameFailure } status = Good;
  Fp v[2];
};

std::vector<Sample> evaluate(const DiscDegreeOptions& o, const TritangentClass& cls, std::uint64_t from,
                             std::size_t count) {
  std::vector<Sample> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    ModulusScope scope(o.p);
    for (std::size_t k; (k = next++) < count;) {
      Sample& s = out[k];
      s.alpha = from + k;
      try {
        for (int f = 0; f < 2; ++f) s.v[f] = disc_value(o.config, cls, Fp(static_cast<long long>(s.alpha)),
                                                       static_cast<std::uint64_t>(f + 1));
      } catch (const SpecializationDegenerate&) {
        s.status = Sample::Excluded;
      } catch (const ProjectionDegenerate&) {
        s.status = Sample::FrameFailure;
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, o.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

/// Removes from f every factor it shares with g; returns the removed degree.
int strip_common(FpPoly& f, const FpPoly& g) {
  int removed = 0;
  if (g.is_zero_poly()) return 0;
  for (FpPoly c = gcd(f, g); c.degree() > 0; c = gcd(f, g)) {
    f = exact_div(f, c);
    removed += c.degree();
  }
  return removed;
}

}  // namespace

DiscDegreeReport disc_degree(const DiscDegreeOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (opts.samples < 1 || opts.held_out < 1) throw DegenerateInput("need samples and held-out points");
  ModulusScope scope(opts.p);
  DiscDegreeReport rep;
  rep.cls = class_for_role(opts.kind, opts.role, opts.config.moving_index);

  const std::size_t need = static_cast<std::size_t>(opts.samples + opts.held_out);
  std::vector<Sample> good;
  std::uint64_t next_alpha = 1;
  while (good.size() < need) {
    const std::size_t batch = need - good.size() + 16;
    if (next_alpha + batch >= opts.p) throw ResourceLimit("ran out of parameters in the prime field");
    for (const auto& s : evaluate(opts, rep.cls, next_alpha, batch)) {
      if (s.status == Sample::Excluded) rep.exclusion.push_back(s.alpha);
      if (s.status == Sample::Good && good.size() < need) good.push_back(s);
    }
    next_alpha += batch;
  }
  rep.samples_used = static_cast<int>(good.size());

  FpPoly common;
  for (int f = 0; f < 2; ++f) {
    std::vector<Fp> xs, ys, hx, hy;
    for (std::size_t k = 0; k < good.size(); ++k) {
      const Fp x(static_cast<long long>(good[k].alpha));
      // Held-out points are spread through the sample range.
      if (k % (need / static_cast<std::size_t>(opts.held_out)) == 0 && hx.size() < static_cast<std::size_t>(opts.held_out)) {
        hx.push_back(x);
        hy.push_back(good[k].v[f]);
      } else {
        xs.push_back(x);
        ys.push_back(good[k].v[f]);
      }
    }
    auto rf = cauchy_interpolate(xs, ys, hx, hy, opts.degree_bound);
    if (rf.num.is_zero_poly()) throw InterpolationUnstable("discriminant vanishes identically");
    rep.raw_degree = std::max(rep.raw_degree, rf.num.degree());
    if (f == 0) rep.interpolant = rf;
    common = f == 0 ? monic(rf.num) : gcd(common, rf.num);
  }
  // Frame-dependent factors differ between the frames and drop out of the gcd.
  if (int lost = rep.raw_degree - common.degree(); lost > 0) rep.removed.push_back({"frame-dependent", lost});

  int excluded = 0;
  for (auto a : rep.exclusion) {
    const Fp x(static_cast<long long>(a));
    while (common.degree() > 0 && common.eval(x).is_zero()) {
      common = exact_div(common, FpPoly(std::vector<Fp>{-x, Fp(1)}));
      ++excluded;
    }
  }
  if (excluded > 0) rep.removed.push_back({"root at an excluded parameter", excluded});

  // General-position conditions that involve the moving point, as polynomials in alpha.
  for (const auto& c : general_position_conditions()) {
    if (!c.involves_all &&
        std::find(c.points.begin(), c.points.end(), opts.config.moving_index) == c.points.end())
      continue;
    std::vector<Fp> xs, ys;
    for (long long a = 1; a <= 12; ++a) {
      xs.emplace_back(a);
      ys.push_back(determinant(c.matrix(opts.config.specialize(Fp(a)), c.points)));
    }
    if (int n = strip_common(common, interpolate_polynomial(xs, ys)); n > 0) rep.removed.push_back({describe(c), n});
  }

  FpPoly sf = squarefree_part(common);
  if (int rep_deg = common.degree() - sf.degree(); rep_deg > 0) rep.removed.push_back({"repeated factors", rep_deg});
  rep.degree = sf.degree();
  rep.component = sf;
  rep.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace sextic
