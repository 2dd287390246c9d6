// Degeneracy-free building blocks derived from the perturbation rules:
// 1D point-on-edge, the upward-ray / edge crossing test used by the Jordan
// curve classifier, and proper segment crossing under perturbation.

#pragma once

#include "sos/perturb.hpp"

namespace sos {

struct Edge2 {
  IndexedPoint2 v0;
  IndexedPoint2 v1;
};

/// Result of casting an upward ray from a point against one edge.
enum class Crossing { None, Crosses, OnEdge };

/// Half-open membership (l <= p) && (p < r): p + eps lies in [l, r].
/// Throws ContractViolation when l > r.
bool point_on_edge_1d(const Rational& l, const Rational& p, const Rational& r);

/// Does the upward ray from p cross edge e?
///   1. vertical edge: None
///   2. order the endpoints into left l and right r by x
///   3. l.x > p.x or p.x >= r.x: None
///   4. D = |l 1; r 1; p 1|
///   5. D == 0: OnEdge
///   6. Crosses iff D < 0 (p is below the edge)
/// Uses coordinate values only; indices play no role.
Crossing ray_crosses_edge(const IndexedPoint2& p, const Edge2& e);

/// True iff the two open segments cross after perturbation:
///   orient(s1.v0, s1.v1, s2.v0) != orient(s1.v0, s1.v1, s2.v1) and
///   orient(s2.v0, s2.v1, s1.v0) != orient(s2.v0, s2.v1, s1.v1),
/// with every orientation decided by sos_orient2d.  Touching configurations
/// resolve to whatever the perturbation dictates.  Throws ContractViolation
/// unless all eight indices are pairwise distinct.
bool segments_intersect_sos(const Edge2& s1, const Edge2& s2);

}  // namespace sos
