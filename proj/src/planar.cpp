#include "sos/planar.hpp"

#include <algorithm>
#include <stdexcept>

namespace sos {

const char* to_string(Containment c) {
  switch (c) {
    case Containment::Inside: return "inside";
    case Containment::Outside: return "outside";
    case Containment::OnBoundary: return "boundary";
  }
  return "?";
}

Polygon::Polygon(std::span<const Point2> vertices, std::uint64_t first_id)
    : first_id_(first_id), next_id_(first_id + vertices.size()) {
  if (vertices.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == vertices[(i + 1) % vertices.size()])
      throw std::invalid_argument("polygon has two consecutive equal vertices at position " + std::to_string(i));
  vertices_ = assign_indices<2>(vertices, first_id);
}

CrossingTally count_crossings(const IndexedPoint2& p, const Polygon& poly) {
  CrossingTally tally;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    switch (ray_crosses_edge(p, poly.edge(i))) {
      case Crossing::Crosses: ++tally.crossings; break;
      case Crossing::OnEdge: tally.on_edge = true; break;
      case Crossing::None: break;
    }
  }
  return tally;
}

namespace {

// Boundary placements the crossing rule skips: on a vertical edge (step 1)
// or at an edge's right endpoint (step 3 excludes p.x == r.x).
bool on_skipped_boundary(const IndexedPoint2& p, const Polygon& poly) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Edge2 e = poly.edge(i);
    if (e.v0[0] == p[0] && e.v0[1] == p[1]) return true;
    if (e.v0[0] == e.v1[0] && e.v0[0] == p[0]) {
      const auto& [lo, hi] = std::minmax(e.v0[1], e.v1[1]);
      if (lo <= p[1] && p[1] <= hi) return true;
    }
  }
  return false;
}

}  // namespace

Containment point_in_polygon(const IndexedPoint2& p, const Polygon& poly) {
  if (poly.uses_point_id(p.point_id)) throw ContractViolation("point_in_polygon: query shares a point id with the polygon");
  const CrossingTally tally = count_crossings(p, poly);
  if (tally.on_edge || on_skipped_boundary(p, poly)) return Containment::OnBoundary;
  return tally.crossings % 2 == 1 ? Containment::Inside : Containment::Outside;
}

Containment point_in_polygon(const Point2& p, const Polygon& poly) {
  return point_in_polygon(make_indexed<2>(p, poly.next_point_id()), poly);
}

Polyline::Polyline(std::span<const Point2> vertices, std::uint64_t first_id) : first_id_(first_id) {
  std::vector<Point2> pts(vertices.begin(), vertices.end());
  if (pts.size() >= 3 && pts.front() == pts.back()) {
    closed_ = true;
    pts.pop_back();
  }
  if (pts.size() < (closed_ ? 3u : 2u))
    throw std::invalid_argument(closed_ ? "closed polyline needs at least 3 distinct vertices"
                                        : "polyline needs at least 2 vertices");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j])
        throw std::invalid_argument("polyline vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                    " coincide");
  vertices_ = assign_indices<2>(pts, first_id);
}

std::size_t polyline_intersection_count(const Polyline& l0, const Polyline& l1) {
  const auto lo0 = l0.vertices().front().point_id, hi0 = l0.next_point_id();
  const auto lo1 = l1.vertices().front().point_id, hi1 = l1.next_point_id();
  if (lo0 < hi1 && lo1 < hi0) throw ContractViolation("polyline_intersection_count: polylines share point ids");
  std::size_t count = 0;
  for (std::size_t i = 0; i < l0.edge_count(); ++i)
    for (std::size_t j = 0; j < l1.edge_count(); ++j)
      if (segments_intersect_sos(l0.edge(i), l1.edge(j))) ++count;
  return count;
}

}  // namespace sos
