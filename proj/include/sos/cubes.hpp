// Volume, surface area and edge length of a union of identical axis-aligned
// cubes.
//
// Each cube face gets a perturbation index, so every face plane is displaced
// by a distinct infinitesimal and no vertex of one cube can lie exactly on a
// face of another.  Union vertices are found as triples of mutually
// perpendicular faces; a vertex coordinate inherits the perturbation of the
// face that created it, so "is this vertex inside that cube" reduces to
// compare_perturbed on face indices.
//
// Measures come from signed per-vertex incidence weights (mixed differences
// of the 8-octant coverage around each vertex).  Weights are summed per
// unperturbed position, which cancels the infinitesimally thin slivers the
// perturbation creates, and yields the measures of the unperturbed union.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sos/perturb.hpp"

namespace sos {

enum class FaceSide : std::uint8_t { Low = 0, High = 1 };

struct FaceIndex {
  std::uint32_t cube = 0;
  std::uint8_t axis = 0;
  FaceSide side = FaceSide::Low;

  /// 6k + 2a + s.
  PerturbationIndex perturbation() const {
    return {6ull * cube + 2ull * axis + static_cast<std::uint64_t>(side)};
  }
  friend bool operator==(const FaceIndex&, const FaceIndex&) = default;
};

struct Cube {
  Point3 low;
  Rational side;
  std::uint32_t id = 0;

  Rational face_value(int axis, FaceSide s) const { return s == FaceSide::Low ? low[axis] : low[axis] + side; }
  PerturbedScalar face(int axis, FaceSide s) const {
    return {face_value(axis, s), FaceIndex{id, static_cast<std::uint8_t>(axis), s}.perturbation()};
  }
};

/// Cubes sharing one side length; ids are 0..n-1 in input order.
class CubeSet {
 public:
  /// Throws std::invalid_argument unless side > 0.
  CubeSet(Rational side, std::span<const Point3> lows);

  const Rational& side() const { return side_; }
  const std::vector<Cube>& cubes() const { return cubes_; }
  std::size_t size() const { return cubes_.size(); }

 private:
  Rational side_;
  std::vector<Cube> cubes_;
};

/// Octant around a vertex: bit a set means the + direction along axis a.
using Octant = unsigned;

/// Vertex of the perturbed union.  `coverage` bit o is set when octant o
/// touching the vertex is solid.
struct UnionVertex {
  Point3 position;
  std::array<FaceIndex, 3> provenance;
  std::uint8_t coverage = 0;

  PerturbedScalar coordinate(int axis) const { return {position[axis], provenance[axis].perturbation()}; }
  bool covered(Octant o) const { return (coverage >> o) & 1u; }
  /// Mixed difference of the coverage: sum over octants of
  /// (product of direction signs) * covered.  A convex cube corner gets the
  /// product of the signs pointing into the solid.
  int volume_weight() const;
};

/// True iff v lies strictly inside c after perturbation.  A vertex created by
/// one of c's faces lies on that face and is not inside.
bool point_in_cube_sos(const UnionVertex& v, const Cube& c);

/// All vertices of the perturbed union, in a deterministic order that does
/// not depend on `threads`.
std::vector<UnionVertex> union_vertices(const CubeSet& s, unsigned threads = 1);

struct MassProperties {
  Rational volume;
  Rational area;
  Rational edge_length;
  friend bool operator==(const MassProperties&, const MassProperties&) = default;
};

/// Measures of the union from its vertex set.  A non-manifold edge where two
/// cubes meet only along that edge counts twice toward edge length.
MassProperties mass_properties(const std::vector<UnionVertex>& vertices);
MassProperties union_mass_properties(const CubeSet& s, unsigned threads = 1);
Rational union_volume(const CubeSet& s);
Rational union_area(const CubeSet& s);
Rational union_edge_length(const CubeSet& s);

/// Independent reference: the distinct face coordinates cut space into boxes
/// that are each entirely inside or outside the union; sums exact box volumes,
/// covered/uncovered interface areas and the lengths of box edges whose four
/// surrounding boxes form a polyhedron edge (1 or 3 solid: once; 2 diagonal:
/// twice).
MassProperties compressed_cell_oracle(const CubeSet& s);

}  // namespace sos
