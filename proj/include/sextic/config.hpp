#pragma once

#include "sextic/gaussian.hpp"
#include "sextic/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sextic {

enum class FieldTag { Q, Qi };

using PointQi = std::array<Gaussian, 3>;

/// Eight labeled points of the projective plane over Q or Q(i), closed under
/// complex conjugation. Indices are 0-based internally and 1-based in text.
class PointConfiguration {
 public:
  /// Normalizes each point to a primitive integer vector (real points to a
  /// rational one) and infers the conjugation involution. Throws ParseError when
  /// a Q configuration has complex coordinates or a conjugate is missing, and
  /// DegenerateConfiguration when the pairing is ambiguous or a point is zero.
  static PointConfiguration make(FieldTag field, const std::array<PointQi, 8>& points);
  static PointConfiguration rational(const std::array<std::array<long, 3>, 8>& points);

  FieldTag field() const { return field_; }
  const std::array<PointQi, 8>& points() const { return points_; }
  const PointQi& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  /// involution()[i] is the index of conj(P_i).
  const std::array<int, 8>& involution() const { return involution_; }
  bool is_real_point(int i) const { return involution_[static_cast<std::size_t>(i)] == i; }
  int num_real() const;
  /// Number of ovals: (#real)/2 + 1.
  int s() const { return num_real() / 2 + 1; }
  /// Stable 64-bit hash of the normalized coordinates (seeds retries).
  std::uint64_t hash() const;
  std::string str() const;

 private:
  FieldTag field_ = FieldTag::Q;
  std::array<PointQi, 8> points_;
  std::array<int, 8> involution_{};
};

/// Primitive integer representative: real points become rational vectors.
PointQi normalize_point(const PointQi& p);
bool proportional(const PointQi& a, const PointQi& b);
PointQi conj_point(const PointQi& p);

struct ValidationReport {
  bool ok = true;
  std::string condition;  // failed condition, empty when ok
  std::string detail;

  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string condition, std::string detail) {
    return {false, std::move(condition), std::move(detail)};
  }
};

/// Distinct points, no three collinear, no six on a conic, and the generic
/// dimension for every linear system of the pipeline (cubic pencil 2, double
/// sextics 4, one curve for each exceptional class), with the type 56/2 cubics
/// nonzero at their excluded point. Ranks are computed modulo a prime and
/// confirmed exactly whenever the modular rank drops.
ValidationReport validate_configuration(const PointConfiguration& p);

}  // namespace sextic
