#include "sos/mesh3d.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sos/parallel.hpp"

namespace sos {

TriMesh::TriMesh(std::span<const Point3> vertices, std::vector<Triangle> triangles)
    : vertices_(assign_indices<3>(vertices)), triangles_(std::move(triangles)) {
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    for (auto v : tri)
      if (v >= vertices_.size())
        throw std::invalid_argument("triangle " + std::to_string(t) + " references vertex " + std::to_string(v) +
                                    " of " + std::to_string(vertices_.size()));
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw std::invalid_argument("triangle " + std::to_string(t) + " repeats a vertex");
  }
}

std::string EdgeViolation::describe() const {
  return "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") has " + std::to_string(incidence) +
         " incident triangles";
}

std::vector<EdgeViolation> validate_watertight(const TriMesh& mesh) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> incidence;
  for (const auto& tri : mesh.triangles())
    for (int e = 0; e < 3; ++e) {
      auto u = tri[e], v = tri[(e + 1) % 3];
      if (u > v) std::swap(u, v);
      ++incidence[{u, v}];
    }
  std::vector<EdgeViolation> out;
  for (const auto& [edge, n] : incidence)
    if (n % 2 != 0) out.push_back({edge.first, edge.second, n});
  return out;
}

UniformGrid::UniformGrid(const TriMesh& mesh, unsigned resolution) : g_(resolution) {
  if (g_ == 0) throw std::invalid_argument("grid resolution must be positive");
  if (mesh.triangle_count() == 0) throw std::invalid_argument("cannot build a grid over an empty mesh");

  const auto& verts = mesh.vertices();
  for (int a = 0; a < 2; ++a) {
    lo_[a] = hi_[a] = verts[mesh.triangles()[0][0]][a];
    for (const auto& tri : mesh.triangles())
      for (auto v : tri) {
        lo_[a] = std::min(lo_[a], verts[v][a]);
        hi_[a] = std::max(hi_[a], verts[v][a]);
      }
    width_[a] = hi_[a] == lo_[a] ? Rational(1) : (hi_[a] - lo_[a]) / Rational(g_);
  }

  // Two passes: count per column, then fill.  Triangle ids stay ascending
  // within each column.
  const std::size_t columns = std::size_t{g_} * g_;
  std::vector<std::array<long, 4>> span(mesh.triangle_count());
  std::vector<std::uint32_t> counts(columns + 1, 0);
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto& tri = mesh.triangles()[t];
    for (int a = 0; a < 2; ++a) {
      const auto& [mn, mx] = std::minmax({verts[tri[0]][a], verts[tri[1]][a], verts[tri[2]][a]});
      span[t][2 * a] = cell(a, mn);
      span[t][2 * a + 1] = cell(a, mx);
    }
    for (long i = span[t][0]; i <= span[t][1]; ++i)
      for (long j = span[t][2]; j <= span[t][3]; ++j) ++counts[i * g_ + j + 1];
  }
  for (std::size_t c = 0; c < columns; ++c) counts[c + 1] += counts[c];
  offsets_ = counts;
  ids_.resize(offsets_.back());
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t)
    for (long i = span[t][0]; i <= span[t][1]; ++i)
      for (long j = span[t][2]; j <= span[t][3]; ++j) ids_[counts[i * g_ + j]++] = static_cast<std::uint32_t>(t);
}

long UniformGrid::cell(int axis, const Rational& v) const {
  const long c = ((v - lo_[axis]) / width_[axis]).floor().get_si();
  return std::clamp<long>(c, 0, static_cast<long>(g_) - 1);
}

std::span<const std::uint32_t> UniformGrid::column(unsigned i, unsigned j) const {
  const std::size_t c = std::size_t{i} * g_ + j;
  return {ids_.data() + offsets_[c], ids_.data() + offsets_[c + 1]};
}

std::span<const std::uint32_t> UniformGrid::candidates(const Rational& x, const Rational& y) const {
  if (x < lo_[0] || x > hi_[0] || y < lo_[1] || y > hi_[1]) return {};
  return column(static_cast<unsigned>(cell(0, x)), static_cast<unsigned>(cell(1, y)));
}

UniformGrid build_grid(const TriMesh& mesh, unsigned g) { return UniformGrid(mesh, g); }

namespace {

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Point3 cross(const Point3& u, const Point3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const Point3& v) {
  return v[0].sign() == Sign::Zero && v[1].sign() == Sign::Zero && v[2].sign() == Sign::Zero;
}

bool on_closed_segment(const Point3& p, const Point3& a, const Point3& b) {
  if (!is_zero(cross(sub(b, a), sub(p, a)))) return false;
  for (int k = 0; k < 3; ++k) {
    const auto& [lo, hi] = std::minmax(a[k], b[k]);
    if (p[k] < lo || p[k] > hi) return false;
  }
  return true;
}

IndexedPoint2 project_xy(const IndexedPoint3& p) { return {{p.coords[0], p.coords[1]}, p.point_id}; }

std::uint64_t min_index(const IndexedPoint3& p) {
  return std::min({p.coords[0].index.value, p.coords[1].index.value, p.coords[2].index.value});
}
std::uint64_t max_index(const IndexedPoint3& p) {
  return std::max({p.coords[0].index.value, p.coords[1].index.value, p.coords[2].index.value});
}

}  // namespace

bool on_closed_triangle(const Point3& p, const Point3& a, const Point3& b, const Point3& c) {
  if (orient3d_exact(a, b, c, p).sign() != Sign::Zero) return false;
  const Point3 n = cross(sub(b, a), sub(c, a));
  if (is_zero(n)) return on_closed_segment(p, a, b) || on_closed_segment(p, b, c) || on_closed_segment(p, c, a);

  // Drop the axis with a nonzero normal component; the projection is then a
  // proper triangle and containment is preserved within the plane.
  const int drop = n[2].sign() != Sign::Zero ? 2 : (n[1].sign() != Sign::Zero ? 1 : 0);
  const int u = drop == 0 ? 1 : 0;
  const int w = drop == 2 ? 1 : 2;
  const Point2 p2{p[u], p[w]}, a2{a[u], a[w]}, b2{b[u], b[w]}, c2{c[u], c[w]};
  const Sign facing = orient2d_exact(a2, b2, c2).sign();
  for (const auto& [s, t] : {std::pair{&a2, &b2}, std::pair{&b2, &c2}, std::pair{&c2, &a2}})
    if (orient2d_exact(*s, *t, p2).sign() == negate(facing)) return false;
  return true;
}

RayHit ray_crosses_triangle_sos(const IndexedPoint3& p, const IndexedPoint3& a, const IndexedPoint3& b,
                                const IndexedPoint3& c) {
  if (min_index(p) <= std::max({max_index(a), max_index(b), max_index(c)}))
    throw ContractViolation("ray_crosses_triangle_sos: query indices must exceed all triangle indices");

  for (int k = 0; k < 2; ++k)
    if (p[k] < std::min({a[k], b[k], c[k]}) || p[k] > std::max({a[k], b[k], c[k]})) return RayHit::Miss;
  if (on_closed_triangle(p.position(), a.position(), b.position(), c.position())) return RayHit::OnSurface;

  const IndexedPoint2 p2 = project_xy(p), a2 = project_xy(a), b2 = project_xy(b), c2 = project_xy(c);
  const Sign s1 = sos_orient2d(a2, b2, p2);
  if (sos_orient2d(b2, c2, p2) != s1 || sos_orient2d(c2, a2, p2) != s1) return RayHit::Miss;
  // With p inside the projection, |a 1; b 1; c 1; p 1| = -n_z (p_z - plane_z)
  // where n_z is the projected triangle's orientation (= s1).
  return sos_orient3d(a, b, c, p) == s1 ? RayHit::Cross : RayHit::Miss;
}

const char* to_string(Location l) {
  switch (l) {
    case Location::Inside: return "inside";
    case Location::Outside: return "outside";
    case Location::OnSurface: return "surface";
  }
  return "?";
}

Location locate_point(const TriMesh& mesh, const UniformGrid& grid, const Point3& p) {
  const IndexedPoint3 q = make_indexed<3>(p, mesh.next_point_id());
  const auto& verts = mesh.vertices();
  std::size_t crossings = 0;
  for (std::uint32_t t : grid.candidates(p[0], p[1])) {
    const auto& tri = mesh.triangles()[t];
    switch (ray_crosses_triangle_sos(q, verts[tri[0]], verts[tri[1]], verts[tri[2]])) {
      case RayHit::OnSurface: return Location::OnSurface;
      case RayHit::Cross: ++crossings; break;
      case RayHit::Miss: break;
    }
  }
  return crossings % 2 == 1 ? Location::Inside : Location::Outside;
}

std::vector<Location> locate_points(const TriMesh& mesh, const UniformGrid& grid, std::span<const Point3> queries,
                                    unsigned threads) {
  std::vector<Location> out(queries.size());
  parallel_for(queries.size(), threads, [&](std::size_t i) { out[i] = locate_point(mesh, grid, queries[i]); });
  return out;
}

}  // namespace sos
