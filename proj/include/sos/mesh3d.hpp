// Point location in a closed triangle mesh: a uniform grid of vertical
// columns indexes the triangles, and a +z ray from the query is tested
// against each candidate with perturbed orientation predicates.  The query
// point takes the highest perturbation indices, so the mesh's perturbation
// dominates.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sos/perturb.hpp"

namespace sos {

using Triangle = std::array<std::uint32_t, 3>;

class TriMesh {
 public:
  /// Vertex k becomes point id k.  Throws std::invalid_argument for an out
  /// of range vertex reference or a triangle repeating a vertex.
  TriMesh(std::span<const Point3> vertices, std::vector<Triangle> triangles);

  const std::vector<IndexedPoint3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }
  std::uint64_t next_point_id() const { return vertices_.size(); }

 private:
  std::vector<IndexedPoint3> vertices_;
  std::vector<Triangle> triangles_;
};

struct EdgeViolation {
  std::uint32_t a = 0;  // a < b
  std::uint32_t b = 0;
  std::size_t incidence = 0;
  std::string describe() const;
};

/// Undirected edges with an odd number of incident triangles, sorted by
/// (a, b).  Empty iff the mesh is watertight in the parity sense.
std::vector<EdgeViolation> validate_watertight(const TriMesh& mesh);

/// g x g columns over the xy bounding box of the mesh.  Each column lists the
/// triangles whose closed xy bounding rectangle meets the closed column.
class UniformGrid {
 public:
  UniformGrid(const TriMesh& mesh, unsigned resolution);

  unsigned resolution() const { return g_; }
  /// Candidates for the vertical line through (x, y); empty outside the box.
  std::span<const std::uint32_t> candidates(const Rational& x, const Rational& y) const;
  std::span<const std::uint32_t> column(unsigned i, unsigned j) const;

 private:
  long cell(int axis, const Rational& v) const;

  unsigned g_ = 1;
  std::array<Rational, 2> lo_, hi_, width_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> ids_;
};

/// Throws std::invalid_argument when the mesh is empty or g == 0.
UniformGrid build_grid(const TriMesh& mesh, unsigned g);

enum class RayHit { Miss, Cross, OnSurface };

/// Does the +z ray from p cross triangle (a, b, c)?
///   OnSurface when p lies exactly on the closed triangle;
///   otherwise Cross iff p's projection is inside the projected triangle
///   (three sos_orient2d signs agree) and p is below the triangle's plane
///   (sos_orient3d(a, b, c, p) has the sign of the projected triangle).
/// Throws ContractViolation unless every index of p exceeds every index of
/// a, b and c.
RayHit ray_crosses_triangle_sos(const IndexedPoint3& p, const IndexedPoint3& a, const IndexedPoint3& b,
                                const IndexedPoint3& c);

/// Exact test: p lies on the closed triangle (a, b, c).
bool on_closed_triangle(const Point3& p, const Point3& a, const Point3& b, const Point3& c);

enum class Location { Inside, Outside, OnSurface };
const char* to_string(Location l);

Location locate_point(const TriMesh& mesh, const UniformGrid& grid, const Point3& p);
/// Results in input order regardless of `threads`.
std::vector<Location> locate_points(const TriMesh& mesh, const UniformGrid& grid, std::span<const Point3> queries,
                                    unsigned threads = 1);

}  // namespace sos
