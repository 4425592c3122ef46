#pragma once

#include "sextic/classes.hpp"
#include "sextic/fp.hpp"
#include "sextic/linear_systems.hpp"
#include "sextic/upoly.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sextic {

using FpPoly = UPoly<Fp>;

/// Class lambda*[lambda] - delta0*[delta_0] on the moduli space (the classes
/// delta_1, delta_2 pair to zero with both rulings and are omitted).
struct DivisorClass {
  long long lambda = 0;
  long long delta0 = 0;
};

/// e(3d^2+2de+e^2-8d-4e+6) and d(d^2+2de+3e^2-4d-8e+6).
std::pair<long long, long long> delta1_bidegree(long long d, long long e);

/// (h.D, v.D) with h.lambda = v.lambda = 4 and (h.delta0, v.delta0) = (33, 34).
std::pair<long long, long long> pullback_bidegree(const DivisorClass& d);

/// Seven fixed integer points and one point moving on a line,
/// P(alpha) = base + alpha * dir, reduced modulo the prime of the caller.
struct ParametricConfig {
  std::array<std::array<long long, 3>, 8> points{};  // the moving entry is ignored
  int moving_index = 7;
  std::array<long long, 3> line_base{0, 1, 0};
  std::array<long long, 3> line_dir{1, 0, 0};

  /// P1..P7 fixed, P8 = (alpha : 1 : 0).
  static ParametricConfig standard();

  /// The specialization at alpha, under the caller's ModulusScope for p.
  Points<Fp> specialize(const Fp& alpha) const;
};

/// Which point moves relative to the class: a point of the class's index set
/// (T8: the triple point; T28: a point on the line; T56: a double point of the
/// quartic; T56_2: one of the pair) or any other point.
enum class MovingRole { Distinguished, Other };

MovingRole parse_moving_role(const std::string& s);
std::string moving_role_name(MovingRole r);

/// A class of the given kind in which point `moving_index` plays the role.
const TritangentClass& class_for_role(ClassKind kind, MovingRole role, int moving_index = 7);

/// Expected degree of the type's component in a point of the given role.
int expected_disc_degree(ClassKind kind, MovingRole role);

/// Total degrees 306, 216, 162, 144 as sums of the per-point degrees.
int expected_total_degree(ClassKind kind);

/// Discriminant of the monic residual cubic of the class at the specialization
/// alpha, computed over GF(p) in a random frame drawn from frame_seed (T8: the
/// tangent cone at the triple point), under the caller's ModulusScope. Throws
/// SpecializationDegenerate when the specialization is not in general position
/// and ProjectionDegenerate when the frame is not generic.
Fp disc_value(const ParametricConfig& pc, const TritangentClass& cls, const Fp& alpha, std::uint64_t frame_seed = 1);

/// N / D in lowest terms, D monic.
struct FpRationalFunction {
  FpPoly num;
  FpPoly den;
  Fp eval(const Fp& x) const;
};

/// Cauchy interpolation: the rational function of least total degree through
/// the sample points that also reproduces every held-out point. Throws
/// InterpolationUnstable when no candidate of total degree at most
/// degree_bound does.
FpRationalFunction cauchy_interpolate(const std::vector<Fp>& xs, const std::vector<Fp>& ys,
                                      const std::vector<Fp>& held_x, const std::vector<Fp>& held_y,
                                      int degree_bound);

/// Polynomial through the points (Newton form), degree below xs.size().
FpPoly interpolate_polynomial(const std::vector<Fp>& xs, const std::vector<Fp>& ys);

/// Factor removed from the numerator before taking the degree.
struct RemovedFactor {
  std::string reason;
  int degree = 0;
};

struct DiscDegreeOptions {
  ClassKind kind = ClassKind::T56_2;
  MovingRole role = MovingRole::Distinguished;
  std::uint64_t p = 1000003;
  int degree_bound = 600;
  int samples = 700;
  int held_out = 20;
  int jobs = 1;
  ParametricConfig config = ParametricConfig::standard();
};

struct DiscDegreeReport {
  TritangentClass cls;
  int degree = 0;
  std::vector<RemovedFactor> removed;
  int samples_used = 0;
  /// Parameters at which the specialization failed.
  std::vector<std::uint64_t> exclusion;
  /// Larger numerator degree of the two frames before cleanup.
  int raw_degree = 0;
  /// The interpolated discriminant in the first frame (frame_seed 1).
  FpRationalFunction interpolant;
  /// The squarefree remainder whose degree is reported.
  FpPoly component;
  double runtime_ms = 0;
};

/// Interpolates the discriminant along the moving line in two independent
/// frames, keeps their common numerator factors (dropping frame-dependent
/// factors where two contact points share a projection), removes the factors
/// that vanish on the general-position failure locus, and returns the degree
/// of the squarefree remainder.
DiscDegreeReport disc_degree(const DiscDegreeOptions& opts);

}  // namespace sextic
