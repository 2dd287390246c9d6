// Point in polygon by upward ray casting, and red/blue polyline crossing
// counts, both built on the perturbed predicates.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sos/predicates.hpp"

namespace sos {

enum class Containment { Inside, Outside, OnBoundary };
const char* to_string(Containment c);

/// Closed polygon; the last vertex connects back to the first.  Holes and
/// multiple components are expressed through the same vertex cycle (or not at
/// all) and simply fall out of the parity rule.
class Polygon {
 public:
  /// Indexes `vertices` as points first_id, first_id+1, ...  Throws
  /// std::invalid_argument for fewer than 3 vertices or for two consecutive
  /// vertices with equal values.
  explicit Polygon(std::span<const Point2> vertices, std::uint64_t first_id = 0);

  const std::vector<IndexedPoint2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Edge2 edge(std::size_t i) const { return {vertices_[i], vertices_[(i + 1) % vertices_.size()]}; }
  /// First point id not used by this polygon; query points are indexed from
  /// here so the polygon's perturbations dominate.
  std::uint64_t next_point_id() const { return next_id_; }
  bool uses_point_id(std::uint64_t id) const { return id >= first_id_ && id < next_id_; }

 private:
  std::vector<IndexedPoint2> vertices_;
  std::uint64_t first_id_ = 0;
  std::uint64_t next_id_ = 0;
};

struct CrossingTally {
  std::size_t crossings = 0;
  bool on_edge = false;
};

/// Sum of ray_crosses_edge over all polygon edges.
CrossingTally count_crossings(const IndexedPoint2& p, const Polygon& poly);

/// Inside iff the upward ray crosses the boundary an odd number of times.
/// OnBoundary when p lies on the closed boundary: any edge reporting OnEdge,
/// plus the two boundary placements the crossing rule never examines (a point
/// on a vertical edge, and a point equal to a vertex that is the right end of
/// both incident edges).  Throws ContractViolation when p shares a point id
/// with the polygon.
Containment point_in_polygon(const IndexedPoint2& p, const Polygon& poly);
Containment point_in_polygon(const Point2& p, const Polygon& poly);

/// Polyline v_0 .. v_{n-1}.  A closed polyline connects v_{n-1} back to v_0;
/// the repeated closing vertex is not stored.
class Polyline {
 public:
  /// Throws std::invalid_argument for fewer than 2 vertices, or for two
  /// vertices with equal values (other than the closing pair, which is
  /// dropped when `vertices.front() == vertices.back()`).
  explicit Polyline(std::span<const Point2> vertices, std::uint64_t first_id = 0);

  const std::vector<IndexedPoint2>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t edge_count() const { return closed_ ? vertices_.size() : vertices_.size() - 1; }
  Edge2 edge(std::size_t i) const { return {vertices_[i], vertices_[(i + 1) % vertices_.size()]}; }
  std::uint64_t next_point_id() const { return first_id_ + vertices_.size(); }

 private:
  std::vector<IndexedPoint2> vertices_;
  std::uint64_t first_id_ = 0;
  bool closed_ = false;
};

/// Number of edge pairs (e in l0, f in l1) with segments_intersect_sos(e, f).
/// Throws ContractViolation when the two polylines share perturbation indices.
std::size_t polyline_intersection_count(const Polyline& l0, const Polyline& l1);

}  // namespace sos
