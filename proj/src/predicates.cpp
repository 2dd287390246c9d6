#include "sos/predicates.hpp"

#include <algorithm>
#include <vector>

namespace sos {

bool point_on_edge_1d(const Rational& l, const Rational& p, const Rational& r) {
  if (l > r) throw ContractViolation("point_on_edge_1d: l > r");
  return l <= p && p < r;
}

Crossing ray_crosses_edge(const IndexedPoint2& p, const Edge2& e) {
  if (e.v0[0] == e.v1[0]) return Crossing::None;
  const bool forward = e.v0[0] < e.v1[0];
  const IndexedPoint2& l = forward ? e.v0 : e.v1;
  const IndexedPoint2& r = forward ? e.v1 : e.v0;
  if (l[0] > p[0] || p[0] >= r[0]) return Crossing::None;
  const Sign d = orient2d_exact(l.position(), r.position(), p.position()).sign();
  if (d == Sign::Zero) return Crossing::OnEdge;
  return d == Sign::Negative ? Crossing::Crosses : Crossing::None;
}

bool segments_intersect_sos(const Edge2& s1, const Edge2& s2) {
  std::vector<std::uint64_t> idx;
  for (const auto* p : {&s1.v0, &s1.v1, &s2.v0, &s2.v1})
    for (const auto& c : p->coords) idx.push_back(c.index.value);
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw ContractViolation("segments_intersect_sos: coordinate indices are not pairwise distinct");

  // Cheap rejection: disjoint closed bounding boxes stay disjoint under an
  // infinitesimal perturbation.
  for (int a = 0; a < 2; ++a) {
    const auto& [lo1, hi1] = std::minmax(s1.v0[a], s1.v1[a]);
    const auto& [lo2, hi2] = std::minmax(s2.v0[a], s2.v1[a]);
    if (hi1 < lo2 || hi2 < lo1) return false;
  }
  if (sos_orient2d(s1.v0, s1.v1, s2.v0) == sos_orient2d(s1.v0, s1.v1, s2.v1)) return false;
  return sos_orient2d(s2.v0, s2.v1, s1.v0) != sos_orient2d(s2.v0, s2.v1, s1.v1);
}

}  // namespace sos
