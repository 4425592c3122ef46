#pragma once

#include "sextic/classes.hpp"
#include "sextic/config.hpp"
#include "sextic/delpezzo.hpp"
#include "sextic/linear_systems.hpp"
#include "sextic/univariate.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sextic {

/// Projective coordinate change x = M x'. Affine chart z' = 1, projection to x'.
struct Frame {
  std::array<std::array<Rational, 3>, 3> m;
  std::array<std::array<Rational, 3>, 3> inv;

  static Frame identity();
  static Frame from_matrix(const std::array<std::array<Rational, 3>, 3>& m);
  /// Unimodular L*U with unit triangular factors of small random entries.
  static Frame random(std::uint64_t& state);
};

struct BasePoint {
  PointQi point;
  int multiplicity = 1;
};

/// Monic residual of C1 and C2: Res_y of the dehomogenized transforms divided
/// by (x - a_k)^m_k for every base point. Checks that the y-leading coefficients
/// are constants, that the resultant has degree d1*d2 and is squarefree, and
/// that every base point projects to a finite value; otherwise throws
/// ProjectionDegenerate. For Q(i) inputs the monic residual must be real.
/// Throws WrongResidualDegree if a base factor does not divide the resultant.
template <class F>
QPoly residual_cubic(const MPoly<F>& c1, const MPoly<F>& c2, const std::vector<BasePoint>& base,
                     const Frame& frame = Frame::identity());

/// Retries random frames (seeded from `seed`) up to `retries` times after the
/// identity frame; throws GenericityFailure when all fail.
template <class F>
QPoly residual_cubic_retry(const MPoly<F>& c1, const MPoly<F>& c2, const std::vector<BasePoint>& base,
                           std::uint64_t seed, int retries = 8, Frame* used = nullptr);

/// Tangent cone of an ordinary triple point.
struct TangentCone {
  /// T(theta) = cone(theta * col0 + col1); monic cubic.
  QPoly cubic;
  /// Columns: col0, col1 span a complement of P, col2 = P.
  Frame frame;
};

/// The degree-3 part of S at P in the frame (col0, col1, P), dehomogenized so
/// that it keeps degree 3. Throws NotTriplePoint.
TangentCone tangent_cone_cubic(const QMPoly& sextic, const std::array<Rational, 3>& p);

struct ClassVerdict {
  TritangentClass cls;
  bool real = false;
  int real_contacts = 0;  // 0 for complex classes
  QPoly residual;         // monic residual or tangent-cone cubic
  std::optional<AmbientPlane> plane;
  /// Route agreement: real roots of the square root of the plane section.
  std::optional<int> section_real_roots;
  /// The square-root cubic has a repeated root (contact order at least 4).
  bool degenerate_contact = false;
  int attempts = 1;
};

struct CensusOptions {
  bool planes = false;
  /// Cross-checks each plane with the branch curve (requires planes).
  bool cross_check = true;
  int jobs = 1;
  int retries = 8;
  /// Basis override (u, v, w); defaults to the integral echelon basis.
  std::optional<SexticBasis<Rational>> basis;
  /// Branch curve of that basis; computed when needed and absent.
  std::optional<QMPoly> branch;
};

struct CensusReport {
  int s = 0;
  int n_real = 0;
  int n_totally_real = 0;
  std::vector<ClassVerdict> classes;
  std::optional<SexticBasis<Rational>> basis;
  std::optional<QMPoly> branch;
};

/// Everything the per-class computations share.
struct CensusContext {
  const PointConfiguration* config = nullptr;
  SexticBasis<Rational> basis;
  std::optional<QMPoly> branch;
  int retries = 8;
};

CensusContext make_context(const PointConfiguration& p, const CensusOptions& opts = {});

/// Reality and real contact count of one class (no plane).
ClassVerdict contact_reality(const CensusContext& ctx, const TritangentClass& cls);

/// Reality, contacts and the exact plane in the basis of the context, solved
/// in the etale algebra of the residual. When the context has a branch curve,
/// Res_W(c, plane) must be a perfect square (else CrossCheckFailed) and the
/// real roots of its square root are recorded.
ClassVerdict tritangent_plane(const CensusContext& ctx, const TritangentClass& cls);

/// Independent plane: C1*C2 (or the T8 sextic) equals a0 u^2 + a1 uv + a2 v^2 + a3 w.
AmbientPlane plane_from_product(const CensusContext& ctx, const TritangentClass& cls);

CensusReport census(const PointConfiguration& p, const CensusOptions& opts = {});

/// Number of real classes for s ovals: 2^(s+2), all 120 when s = 5.
inline int expected_real_count(int s) { return s >= 5 ? 120 : 1 << (s + 2); }

/// Random configurations for a given number of ovals s (2s-2 real points and
/// 5-s conjugate pairs) with integer coordinates in [-height, height].
struct SamplerSpec {
  int s = 5;
  int height = 20;
};

struct SearchSample {
  int index = 0;
  PointConfiguration config;
  int n_real = 0;
  int n_totally_real = 0;
};

struct SearchResult {
  std::vector<SearchSample> samples;
  int rejected = 0;
  std::vector<std::string> rejection_log;
  /// histogram[k] = number of samples with k totally real tritangents.
  std::array<int, 121> histogram{};
};

/// Deterministic sampler: draw from a seeded generator, reject invalid draws.
PointConfiguration random_configuration(const SamplerSpec& spec, std::uint64_t& state);

SearchResult search(const SamplerSpec& spec, int count, std::uint64_t seed, int jobs = 1);

}  // namespace sextic
