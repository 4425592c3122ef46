#pragma once

#include "sextic/fp.hpp"
#include "sextic/groebner.hpp"
#include "sextic/mpoly.hpp"
#include "sextic/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace sextic {

/// Ternary forms in x, y, z.
const RingPtr& plane_ring();
/// The chart (1 : t : t^2 : W) of the quadric cone.
const RingPtr& chart_ring();
/// Space coordinates x0, x1, x2, x3.
const RingPtr& ambient_ring();

/// The branch curve c(t, W), monic in t^6, with monomials t^i W^j, i + 2j <= 6.
struct BranchCurve {
  QMPoly c;
  std::string method;  // "groebner" or "linear"
};

struct BranchOptions {
  /// Exponent k of the colon by <u,v>^k. The printed exponent 2 leaves
  /// components over the base points in place; 3 removes them.
  int colon_power = 3;
  /// Post-hoc Buchberger test on the Groebner bases of every modular run.
  bool check_bases = false;
  GroebnerOptions groebner;
  int max_primes = 4096;
  std::uint64_t seed = 0x5eed2018ULL;
};

struct BranchStats {
  int primes = 0;
  int rejected = 0;
  bool bases_checked = false;
  bool bases_ok = true;
  bool certified = false;
};

/// det of the Jacobian of (x, y, z) -> (u, v, w), a form of degree 9.
QMPoly jacobian_determinant(const QMPoly& u, const QMPoly& v, const QMPoly& w);

/// The branch curve by the ideal formula
///   ((<det J> + Minors(u^2 uv v^2 w ; 1 t t^2 W)) : <u,v>^k) ∩ Q[t,W],
/// run modulo word-size primes, lifted by CRT and rational reconstruction, and
/// certified exactly over Q (see satisfies_branch_identity).
BranchCurve branch_curve(const QMPoly& u, const QMPoly& v, const QMPoly& w, const BranchOptions& opts = {},
                         BranchStats* stats = nullptr);

/// The same curve from linear algebra: the unique c with the triangular Newton
/// polygon such that u^6 c(v/u, w/u^2) is a multiple of (det J)^2. Multi-modular
/// with the same exact certificate.
BranchCurve branch_curve_linear(const QMPoly& u, const QMPoly& v, const QMPoly& w, BranchStats* stats = nullptr);

/// One modular run of the ideal formula (current ModulusScope). The signature
/// lists the leading monomials of the bases met, for unlucky-prime voting.
MPoly<Fp> branch_curve_image(const MPoly<Fp>& u, const MPoly<Fp>& v, const MPoly<Fp>& w, const BranchOptions& opts,
                             std::string* signature = nullptr, bool* bases_ok = nullptr);

/// Exact certificate: sum c_ij u^(6-i-2j) v^i w^j = lambda (det J)^2 with lambda != 0.
bool satisfies_branch_identity(const QMPoly& c, const QMPoly& u, const QMPoly& v, const QMPoly& w);

bool newton_polygon_ok(const QMPoly& c);

/// Smoothness of the curve on the quadric cone. In the chart, Res_W(c, c_W) and
/// Res_W(c, c_t) are coprime; along the boundary chart the top cubic
/// c60 + c41 V + c22 V^2 + c03 V^3 is squarefree; the vertex is avoided (c03 != 0).
/// The test is sufficient, not necessary.
bool is_smooth(const QMPoly& c);

/// c(t, W - alpha - beta t - gamma t^2), renormalized monic in t^6.
QMPoly w_shift(const QMPoly& c, const Rational& alpha, const Rational& beta, const Rational& gamma);

/// Monic in t^6 (throws DegenerateConfiguration when that coefficient is zero).
QMPoly monic_t6(const QMPoly& c);

/// A space sextic as a quadric and a cubic in x0..x3.
struct AmbientPair {
  QMPoly Q;
  QMPoly K;
};

/// Q = x0 x2 - x1^2 and K from c by t^(2q+r) W^j -> x2^q x1^r x3^j x0^(3-q-r-j).
AmbientPair to_ambient(const QMPoly& c);

/// f(1, t, t^2, W) for a form in x0..x3.
QMPoly restrict_to_chart(const QMPoly& f);

/// Normal form modulo x0 x2 - x1^2: every x1^2 is rewritten as x0 x2.
QMPoly reduce_mod_cone(const QMPoly& f);

/// t^2 + e1 t + e2 + e3 W.
struct ChartPlane {
  Rational e1, e2, e3;
};

/// u0 x0 + u1 x1 + u2 x2 + u3 x3.
struct AmbientPlane {
  std::array<Rational, 4> u;

  /// Primitive integer coordinates with the first nonzero one positive.
  AmbientPlane normalized() const;
  bool proportional_to(const AmbientPlane& o) const;
  std::string str() const;
};

AmbientPlane chart_to_ambient(const ChartPlane& h);
/// Defined when the x2 coefficient is nonzero.
std::optional<ChartPlane> ambient_to_chart(const AmbientPlane& h);

/// Binary sextic of c restricted to the plane, as a polynomial in t: a3^3 c(t, W(t))
/// with W(t) = -(u0 + u1 t + u2 t^2) / u3. Requires u3 != 0.
UPoly<Rational> plane_section_sextic(const QMPoly& c, const AmbientPlane& h);

}  // namespace sextic
