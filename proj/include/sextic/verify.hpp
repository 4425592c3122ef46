#pragma once

#include "sextic/delpezzo.hpp"
#include "sextic/univariate.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sextic {

/// Solve the plane for x_i, eliminate x_j, dehomogenize the remaining pair.
/// A nonzero shear first replaces x_a by x_a + s0 x_j and x_b by x_b + s1 x_j
/// (a < b the remaining indices), which moves the center of projection inside
/// the plane.
struct ProjectionSpec {
  int solve_var = 3;
  int eliminate_var = 2;
  std::array<long, 2> shear{0, 0};
};

enum class TritangencyStatus { NotTritangent, Tritangent, DegenerateContact, BaseDegenerate };

struct TritangencyResult {
  TritangencyStatus status = TritangencyStatus::BaseDegenerate;
  int real_contacts = 0;  // meaningful for Tritangent
  std::optional<ProjectionSpec> spec;
  QPoly sextic;  // the projected binary sextic of the accepted spec
  QPoly cubic;   // monic square root, when one exists

  /// "not_tritangent", "tritangent(3)", "degenerate_contact" or "base_degenerate".
  std::string str() const;
};

/// The binary sextic Res_{x_j}(Q|H, K|H) with x_a = 1 for the smaller remaining
/// index a, as a polynomial in the other remaining variable. Throws
/// ProjectionDegenerate when the plane's x_i coefficient is zero, when Q|H does
/// not have degree 2 in x_j with constant leading coefficient, or when the
/// result has degree below 6.
QPoly project_to_sextic(const QMPoly& q, const QMPoly& k, const AmbientPlane& h, const ProjectionSpec& spec);

/// The 12 ordered pairs, solve variables by descending |u_i|, ties by index.
std::vector<ProjectionSpec> projection_order(const AmbientPlane& h);

/// Q restricted to H is, up to scalar, the square of a linear form: the plane
/// is tangent to the quadric along a line (for the cone, a plane through the
/// vertex tangent along a ruling). Every section is then double, so no square
/// test can tell tritangency apart.
bool quadric_section_is_square(const QMPoly& q, const AmbientPlane& h);

/// Projects with the first spec of projection_order that gives degree 6 and
/// decides: not a square, square of a squarefree cubic (tritangent, with its
/// real root count), or square of a cubic with a repeated root. A repeated root
/// can also come from two contact points with the same projection, so that
/// verdict is only given when the later specs and a few sheared projections
/// all show it too.
TritangencyResult verify_tritangent(const QMPoly& q, const QMPoly& k, const AmbientPlane& h);

}  // namespace sextic
