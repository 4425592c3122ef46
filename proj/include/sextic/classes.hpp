#pragma once

#include "sextic/config.hpp"
#include "sextic/linear_systems.hpp"

#include <string>
#include <vector>

namespace sextic {

enum class ClassKind { T8, T28, T56, T56_2 };

/// One of the 120 Bertini-paired classes of exceptional curves.
///   T8:    indices {i}; the sextic triple at P_i and double elsewhere.
///   T28:   indices {i,j}; the line P_iP_j and the quintic simple at P_i, P_j.
///   T56:   indices = the complementary triple {i,j,k}; the conic through the
///          other five points and the quartic double at P_i, P_j, P_k.
///   T56_2: indices {i,j}; the cubic double at P_i avoiding P_j and the swap.
/// Order: T8 by i, then T28, T56 and T56_2 lexicographically.
struct TritangentClass {
  ClassKind kind = ClassKind::T8;
  std::vector<int> indices;  // 0-based, increasing
  int index = 0;             // position 0..119

  /// "8", "28", "56" or "56-2".
  std::string kind_name() const;
  /// e.g. "T28(5,6)" with 1-based indices.
  std::string label() const;
};

const std::vector<TritangentClass>& all_classes();
/// Finds a class by kind and 0-based indices (sorted internally).
const TritangentClass& find_class(ClassKind kind, std::vector<int> indices);
ClassKind parse_class_kind(const std::string& s);

/// The class is real iff its index set is stable under the involution.
bool classify_class_reality(const PointConfiguration& p, const TritangentClass& cls);

/// Points through which both curves pass simply (T28: P_i, P_j; T56: the five;
/// T56_2: the six others). Empty for T8.
std::vector<int> class_base_points(const TritangentClass& cls);

/// Multiplicity data of the two curves (T8: only the first is meaningful).
std::pair<MultiplicityAssignment, MultiplicityAssignment> class_systems(const TritangentClass& cls);

template <class F>
struct ExceptionalPair {
  MPoly<F> c1, c2;              // for T8, c1 is the sextic and c2 is zero
  bool tangent_cone = false;    // T8: process the tangent cone at the triple point
  std::vector<int> base_points; // see class_base_points
};

/// Both curves as echelon bases of their one-dimensional systems. For T56_2
/// checks that each cubic avoids its excluded point (NonGenericVanishing).
template <class F>
ExceptionalPair<F> exceptional_pair(const Points<F>& pts, const TritangentClass& cls) {
  auto [m1, m2] = class_systems(cls);
  ExceptionalPair<F> out;
  out.base_points = class_base_points(cls);
  out.c1 = linear_system_basis(pts, m1).front();
  if (cls.kind == ClassKind::T8) {
    out.tangent_cone = true;
    out.c2 = MPoly<F>(plane_ring());
    return out;
  }
  out.c2 = linear_system_basis(pts, m2).front();
  if (cls.kind == ClassKind::T56_2) {
    const auto& pi = pts[static_cast<std::size_t>(cls.indices[0])];
    const auto& pj = pts[static_cast<std::size_t>(cls.indices[1])];
    if (is_zero(out.c1.eval(std::vector<F>(pj.begin(), pj.end()))) ||
        is_zero(out.c2.eval(std::vector<F>(pi.begin(), pi.end()))))
      throw NonGenericVanishing("type 56-2 cubic vanishes at its excluded point for " + cls.label());
  }
  return out;
}

/// The real curve pair of a real class whose two systems are each
/// conjugation-stable (every real class except T56_2 on a conjugate pair).
/// Over Q(i) the bases are made real by real_basis. Throws NotConjStable.
ExceptionalPair<Rational> real_exceptional_pair(const PointConfiguration& p, const TritangentClass& cls);

/// True for a T56_2 class whose pair {i,j} is a conjugate pair: the two cubics
/// are then complex conjugates of each other.
bool is_swapped_pair(const PointConfiguration& p, const TritangentClass& cls);

/// Real basis (u, v, w) of the configuration: echelon pencil and canonical
/// complement of the double sextics, real for Q(i) configurations.
SexticBasis<Rational> real_sextic_basis(const PointConfiguration& p);

/// Each form scaled to its primitive integer associate. The census default:
/// same planes up to a diagonal rescaling, much smaller branch-curve heights.
SexticBasis<Rational> integral_basis(const SexticBasis<Rational>& b);

/// Real basis of a conjugation-stable linear system (direct over Q).
std::vector<QMPoly> real_system(const PointConfiguration& p, const MultiplicityAssignment& ma);

}  // namespace sextic
