#pragma once

#include "wf/rational_fn.hpp"

namespace wf {

enum class OperatorKind { Backward, Forward };

/// Backward generator applied in chart coordinates:
///   L* u = 1/2 sum_{i,j} p^i (delta_ij - p^j) d^2 u / dp^i dp^j,
/// summing over the free variables of the chart. On a vertex face the
/// operator is identically zero.
MultiPoly apply_backward(const MultiPoly& u);
RationalFn apply_backward(const RationalFn& u);

/// Forward generator: L u = 1/2 sum_{i,j} d^2/dp^i dp^j (p^i (delta_ij - p^j) u).
MultiPoly apply_forward(const MultiPoly& u);

/// The boundary-vanishing weight: product of all homogeneous coordinates of
/// the face, expressed in its standard chart. Degree dim+1, positive on the
/// open face, zero on the whole boundary.
MultiPoly omega(const Face& face);

/// (restrict to subface, then apply L*) minus (apply L*, then restrict).
/// Identically zero for every polynomial; exposed as a checkable defect.
MultiPoly restriction_defect(const MultiPoly& u, const Face& subface);

/// (L u, phi) - (u, L* phi) under exact face integration. Zero whenever phi
/// vanishes on the face boundary.
Rational adjointness_defect(const MultiPoly& u, const MultiPoly& phi);

}  // namespace wf
